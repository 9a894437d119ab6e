//! Geodesic polygons: interior angles, spherical excess and area.
//!
//! The area of a polygon whose sides are Great Circle arcs follows from its
//! angles alone:
//!
//! ```text
//! A = R² · (α₁ + … + α_N − (N − 2)·180°) · (2π/360)
//! ```
//!
//! Vertices are ordered counterclockwise as seen from outside the sphere, so
//! the enclosed region lies to the left of each side. Reversing the order
//! describes the complementary region.

use serde::Serialize;

use crate::geometry::{great_circle_distance, to_cartesian, LatLon, SphereConfig, Vec3};
use crate::{Error, Result};

/// Minimum `|a × b|` between unit vectors of adjacent vertices.
const MIN_SIDE_SINE: f64 = 1e-9;

/// An ordered ring of at least three vertices joined by Great Circle arcs.
#[derive(Clone, Debug)]
pub struct GeodesicPolygon {
    vertices: Vec<LatLon>,
    cfg: SphereConfig,
}

impl GeodesicPolygon {
    pub fn new(vertices: Vec<LatLon>, cfg: SphereConfig) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::TooFewVertices(vertices.len()));
        }
        let units: Vec<Vec3> = vertices
            .iter()
            .map(|&p| to_cartesian(p, SphereConfig::UNIT))
            .collect();
        for i in 0..units.len() {
            let j = (i + 1) % units.len();
            check_side(&units[i], &units[j]).map_err(|_| Error::DegenerateSide(i, j))?;
        }
        Ok(Self { vertices, cfg })
    }

    pub fn vertices(&self) -> &[LatLon] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn config(&self) -> SphereConfig {
        self.cfg
    }

    /// The same region with the opposite traversal, i.e. the complement.
    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self {
            vertices,
            cfg: self.cfg,
        }
    }

    pub fn interior_angles(&self) -> Result<Vec<f64>> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                vertex_angle(
                    self.vertices[(i + n - 1) % n],
                    self.vertices[i],
                    self.vertices[(i + 1) % n],
                )
            })
            .collect()
    }
}

fn check_side(a: &Vec3, b: &Vec3) -> Result<()> {
    if a.cross(b).norm() < MIN_SIDE_SINE {
        Err(Error::DegenerateDirection)
    } else {
        Ok(())
    }
}

/// Interior angle, in degrees within `[0, 360)`, at `at` for a polygon that
/// arrives from `prev` and leaves toward `next`, with the interior on the left.
///
/// The inputs only need to point in the right directions; their lengths are
/// ignored.
pub fn interior_angle(prev: Vec3, at: Vec3, next: Vec3) -> Result<f64> {
    let (Some(prev), Some(at), Some(next)) =
        (prev.normalized(), at.normalized(), next.normalized())
    else {
        return Err(Error::DegenerateDirection);
    };
    check_side(&prev, &at)?;
    check_side(&at, &next)?;
    // Tangents at `at` pointing back along each side. Each is the normal of
    // the side's Great Circle turned a quarter turn about `at`.
    let back = at.cross(&prev).cross(&at);
    let ahead = at.cross(&next).cross(&at);
    let sin = at.dot(&ahead.cross(&back));
    let cos = ahead.dot(&back);
    Ok(sin.atan2(cos).to_degrees().rem_euclid(360.0))
}

/// Interior angle at `at` between the sides toward `prev` and `next`.
pub fn vertex_angle(prev: LatLon, at: LatLon, next: LatLon) -> Result<f64> {
    let unit = |p| to_cartesian(p, SphereConfig::UNIT);
    interior_angle(unit(prev), unit(at), unit(next))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolygonReport {
    pub interior_angles: Vec<f64>,
    pub angle_sum: f64,
    pub excess: f64,
    pub spherical_area: f64,
    /// `side_lengths[i]` runs from vertex `i` to vertex `i + 1`.
    pub side_lengths: Vec<f64>,
}

pub fn polygon_report(poly: &GeodesicPolygon) -> Result<PolygonReport> {
    let interior_angles = poly.interior_angles()?;
    let n = poly.len();
    let angle_sum: f64 = interior_angles.iter().sum();
    let excess = angle_sum - (n as f64 - 2.0) * 180.0;
    let r = poly.cfg.radius();
    let spherical_area = r * r * excess.to_radians();
    let side_lengths = (0..n)
        .map(|i| great_circle_distance(poly.vertices[i], poly.vertices[(i + 1) % n], poly.cfg))
        .collect();
    Ok(PolygonReport {
        interior_angles,
        angle_sum,
        excess,
        spherical_area,
        side_lengths,
    })
}

/// Planar triangle area from its side lengths.
pub fn heron_area(a: f64, b: f64, c: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(Error::NonFinite);
    }
    if a < 0.0 || b < 0.0 || c < 0.0 {
        return Err(Error::NotATriangle(a, b, c));
    }
    let mut s = [a, b, c];
    s.sort_by(|x, y| y.total_cmp(x));
    let [a, b, c] = s;
    if a > (b + c) * (1.0 + 1e-9) {
        return Err(Error::NotATriangle(a, b, c));
    }
    // Ordered a ≥ b ≥ c, this arrangement of s(s−a)(s−b)(s−c) avoids
    // cancellation for needle-shaped triangles.
    let product = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    Ok(0.25 * product.max(0.0).sqrt())
}

/// Spherical area of a triangle minus the planar area of a triangle with the
/// same (arc-length) sides.
pub fn sphere_vs_plane_excess_area(poly: &GeodesicPolygon) -> Result<f64> {
    if poly.len() != 3 {
        return Err(Error::TriangleOnly(poly.len()));
    }
    let report = polygon_report(poly)?;
    let s = &report.side_lengths;
    Ok(report.spherical_area - heron_area(s[0], s[1], s[2])?)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    fn ll(lat: f64, lon: f64) -> LatLon {
        LatLon::new(lat, lon).unwrap()
    }

    const FLORIDA: (f64, f64) = (28.0, -81.0);
    const BERMUDA: (f64, f64) = (32.0, -65.0);
    const PUERTO_RICO: (f64, f64) = (18.0, -66.0);

    fn bermuda() -> GeodesicPolygon {
        let v = [FLORIDA, PUERTO_RICO, BERMUDA].map(|(a, b)| ll(a, b));
        GeodesicPolygon::new(v.to_vec(), SphereConfig::EARTH).unwrap()
    }

    fn octant(cfg: SphereConfig) -> GeodesicPolygon {
        GeodesicPolygon::new(vec![ll(0.0, 0.0), ll(0.0, 90.0), ll(90.0, 0.0)], cfg).unwrap()
    }

    #[test]
    fn bermuda_vertex_angles() {
        let [f, b, p] = [FLORIDA, BERMUDA, PUERTO_RICO].map(|(a, b)| ll(a, b));
        assert!((vertex_angle(b, f, p).unwrap() - 52.8).abs() < 0.3);
        assert!((vertex_angle(p, b, f).unwrap() - 74.1).abs() < 0.3);
        assert!((vertex_angle(f, p, b).unwrap() - 54.8).abs() < 0.3);
    }

    #[test]
    fn clockwise_order_gives_reflex_angles() {
        let [f, b, p] = [FLORIDA, BERMUDA, PUERTO_RICO].map(|(a, b)| ll(a, b));
        let ccw = vertex_angle(b, f, p).unwrap();
        let cw = vertex_angle(p, f, b).unwrap();
        assert!((ccw + cw - 360.0).abs() < 1e-9);
    }

    #[test]
    fn octant_angles_are_right() {
        for a in octant(SphereConfig::UNIT).interior_angles().unwrap() {
            assert!((a - 90.0).abs() < 1e-6);
        }
    }

    #[test]
    fn bermuda_report() {
        let r = polygon_report(&bermuda()).unwrap();
        assert!((r.angle_sum - 181.7).abs() < 0.3);
        assert!((r.spherical_area / 1_211_500.0 - 1.0).abs() < 0.01);
        for (got, want) in r.side_lengths.iter().zip([1895.0, 1562.0, 1604.0]) {
            assert!((got - want).abs() < 10.0, "{got} vs {want}");
        }
    }

    #[test]
    fn octant_report() {
        let cfg = SphereConfig::EARTH;
        let r = polygon_report(&octant(cfg)).unwrap();
        assert!((r.excess - 90.0).abs() < 1e-9);
        let eighth = 4.0 * PI * 6378.0 * 6378.0 / 8.0;
        assert!((r.spherical_area / eighth - 1.0).abs() < 1e-6);
    }

    #[test]
    fn degenerate_polygons() {
        let cfg = SphereConfig::EARTH;
        assert!(matches!(
            GeodesicPolygon::new(vec![ll(0.0, 0.0), ll(1.0, 1.0)], cfg),
            Err(Error::TooFewVertices(2))
        ));
        assert!(matches!(
            GeodesicPolygon::new(vec![ll(0.0, 0.0), ll(0.0, 0.0), ll(1.0, 1.0)], cfg),
            Err(Error::DegenerateSide(0, 1))
        ));
        assert!(matches!(
            GeodesicPolygon::new(vec![ll(0.0, 0.0), ll(10.0, 10.0), ll(0.0, 180.0)], cfg),
            Err(Error::DegenerateSide(2, 0))
        ));
        assert!(vertex_angle(ll(5.0, 5.0), ll(5.0, 5.0), ll(0.0, 0.0)).is_err());
    }

    #[test]
    fn heron_examples() {
        let a = heron_area(1895.0, 1562.0, 1604.0).unwrap();
        assert!((a / 1_200_800.0 - 1.0).abs() < 1e-3);
        assert!((heron_area(3.0, 4.0, 5.0).unwrap() - 6.0).abs() < 1e-12);
        assert_eq!(heron_area(1.0, 2.0, 3.0).unwrap(), 0.0);
        assert!(heron_area(1.0, 2.0, 4.0).is_err());
        assert!(heron_area(-1.0, 2.0, 2.0).is_err());
    }

    #[test]
    fn plane_comparison() {
        let extra = sphere_vs_plane_excess_area(&bermuda()).unwrap();
        assert!((extra / 10_700.0 - 1.0).abs() < 0.15, "{extra}");

        // Octant: both terms have closed forms.
        let r: f64 = 6378.0;
        let side = PI * r / 2.0;
        let expected = PI * r * r / 2.0 - 3f64.sqrt() / 4.0 * side * side;
        let got = sphere_vs_plane_excess_area(&octant(SphereConfig::EARTH)).unwrap();
        assert!((got / expected - 1.0).abs() < 1e-9);

        // Roughly 1 km sides on the equator: the two areas agree.
        let d = (1.0 / 6378.0_f64).to_degrees();
        let tiny = GeodesicPolygon::new(
            vec![ll(0.0, 0.0), ll(0.0, d), ll(d * 0.866, d / 2.0)],
            SphereConfig::EARTH,
        )
        .unwrap();
        assert!(sphere_vs_plane_excess_area(&tiny).unwrap().abs() < 1e-3);

        let square = GeodesicPolygon::new(
            vec![ll(0.0, 0.0), ll(0.0, 1.0), ll(1.0, 1.0), ll(1.0, 0.0)],
            SphereConfig::EARTH,
        )
        .unwrap();
        assert!(matches!(
            sphere_vs_plane_excess_area(&square),
            Err(Error::TriangleOnly(4))
        ));
    }

    #[test]
    fn reversed_polygon_is_the_complement() {
        let cfg = SphereConfig::EARTH;
        let poly = bermuda();
        let a = polygon_report(&poly).unwrap().spherical_area;
        let b = polygon_report(&poly.reversed()).unwrap().spherical_area;
        let sphere = 4.0 * PI * cfg.radius().powi(2);
        assert!(((a + b) / sphere - 1.0).abs() < 1e-12);
    }
}
