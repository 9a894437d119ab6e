//! Spherical geometry built from two vector products.
//!
//! `spherekit` converts latitude/longitude to Cartesian coordinates, measures
//! Great Circle distances with the dot product, finds the angles of geodesic
//! polygons with the cross product, and turns angle sums into areas through
//! the spherical excess. The same bookkeeping drives a parallel-transport
//! model of holonomy (and with it the Foucault precession formula) and the
//! Euler characteristic accounting of polygonal coverings.
//!
//! Angles cross every public boundary in degrees; radians are internal only.
//!
//! ```
//! use spherekit::{great_circle_distance, LatLon, SphereConfig};
//!
//! let nyc = LatLon::new(41.0, -74.0).unwrap();
//! let paris = LatLon::new(49.0, 3.0).unwrap();
//! let d = great_circle_distance(nyc, paris, SphereConfig::EARTH);
//! assert!((d - 5862.0).abs() < 10.0);
//! ```

mod error;
pub mod geometry;
pub mod holonomy;
pub mod mesh;
pub mod polygon;

pub use error::{Error, Result};
pub use geometry::{
    central_angle, cross, dot, great_circle_distance, great_circle_pole, law_of_cosines_angle,
    to_cartesian, to_latlon, LatLon, SphereConfig, Vec3,
};
pub use holonomy::{
    area_from_holonomy, cap_area, foucault_precession, holonomy_from_area,
    latitude_circle_holonomy, latitude_circle_polygon, smooth_curve_holonomy, transport_polygon,
    Holonomy, TransportWalk,
};
pub use mesh::{
    angle_sum_identity_check, canonical_mesh, edge_double_count_check, euler_characteristic,
    load_mesh, vertex_angle_sum_check, CanonicalMesh, Genus, SurfaceMesh, TopologyReport,
};
pub use polygon::{
    heron_area, interior_angle, polygon_report, sphere_vs_plane_excess_area, vertex_angle,
    GeodesicPolygon, PolygonReport,
};
