//! Geographic and Cartesian coordinates, and the dot/cross-product primitives.
//!
//! A point at latitude `lat` and longitude `lon` on a sphere of radius `R`
//! sits at
//!
//! ```text
//! (R cos(lat) cos(lon), R cos(lat) sin(lon), R sin(lat))
//! ```
//!
//! with the z-axis through the North Pole and the x-axis through the prime
//! meridian. Longitudes are East-positive.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Slack allowed on a cosine before it counts as outside `[-1, 1]`.
pub(crate) const COSINE_SLACK: f64 = 1e-9;

/// A geographic coordinate in degrees.
///
/// Latitude is North-positive in `[-90, 90]`; longitude is East-positive and
/// normalized into `(-180, 180]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LatLon {
    lat: f64,
    lon: f64,
}

impl LatLon {
    pub fn new(lat: f64, lon: f64) -> Result<Self> {
        if !lat.is_finite() || !lon.is_finite() {
            return Err(Error::NonFinite);
        }
        if !(-90.0..=90.0).contains(&lat) {
            return Err(Error::LatitudeOutOfRange(lat));
        }
        Ok(Self {
            lat,
            lon: normalize_longitude(lon),
        })
    }

    pub fn lat(&self) -> f64 {
        self.lat
    }

    pub fn lon(&self) -> f64 {
        self.lon
    }
}

fn normalize_longitude(lon: f64) -> f64 {
    let l = lon.rem_euclid(360.0);
    if l > 180.0 {
        l - 360.0
    } else {
        l
    }
}

/// A Cartesian triple: kilometres for positions, unitless for directions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(&self, other: &Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// The formal determinant with rows `(i, j, k)`, `self`, `other`.
    pub fn cross(&self, other: &Vec3) -> Vec3 {
        Vec3 {
            x: self.y * other.z - other.y * self.z,
            y: self.z * other.x - other.z * self.x,
            z: self.x * other.y - other.x * self.y,
        }
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y).hypot(self.z)
    }

    /// Unit vector in the same direction, or `None` for the zero vector.
    pub fn normalized(&self) -> Option<Vec3> {
        let n = self.norm();
        (n > 0.0 && n.is_finite()).then(|| *self * (1.0 / n))
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, k: f64) -> Vec3 {
        Vec3::new(self.x * k, self.y * k, self.z * k)
    }
}

/// Sphere radius in kilometres.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SphereConfig {
    radius_km: f64,
}

impl SphereConfig {
    /// Earth with the conventional 6378 km radius.
    pub const EARTH: SphereConfig = SphereConfig { radius_km: 6378.0 };
    pub const UNIT: SphereConfig = SphereConfig { radius_km: 1.0 };

    pub fn new(radius_km: f64) -> Result<Self> {
        if radius_km.is_finite() && radius_km > 0.0 {
            Ok(Self { radius_km })
        } else {
            Err(Error::InvalidRadius(radius_km))
        }
    }

    pub fn radius(&self) -> f64 {
        self.radius_km
    }
}

impl Default for SphereConfig {
    fn default() -> Self {
        Self::EARTH
    }
}

pub fn to_cartesian(p: LatLon, cfg: SphereConfig) -> Vec3 {
    let (lat, lon) = (p.lat.to_radians(), p.lon.to_radians());
    let r = cfg.radius_km;
    Vec3::new(
        r * lat.cos() * lon.cos(),
        r * lat.cos() * lon.sin(),
        r * lat.sin(),
    )
}

/// Direction of `v` as a geographic coordinate. The length of `v` is
/// ignored; `cfg` is accepted for symmetry with [`to_cartesian`].
///
/// Longitude is undefined on the polar axis; it is reported as 0 there.
pub fn to_latlon(v: Vec3, _cfg: SphereConfig) -> Result<LatLon> {
    if !v.is_finite() {
        return Err(Error::NonFinite);
    }
    if v.norm() == 0.0 {
        return Err(Error::DegenerateDirection);
    }
    let equatorial = v.x.hypot(v.y);
    let lat = v.z.atan2(equatorial).to_degrees();
    let lon = if equatorial == 0.0 {
        0.0
    } else {
        v.y.atan2(v.x).to_degrees()
    };
    LatLon::new(lat.clamp(-90.0, 90.0), lon)
}

pub fn dot(a: Vec3, b: Vec3) -> f64 {
    a.dot(&b)
}

pub fn cross(a: Vec3, b: Vec3) -> Vec3 {
    a.cross(&b)
}

/// Angle subtended at the centre by `a` and `b`, in degrees within `[0, 180]`.
///
/// Evaluated as `atan2(|a×b|, a·b)`, which equals `acos(a·b / |a||b|)` and
/// keeps full precision for nearly coincident and nearly antipodal pairs.
pub fn central_angle(a: Vec3, b: Vec3) -> Result<f64> {
    if a.norm() == 0.0 || b.norm() == 0.0 {
        return Err(Error::DegenerateDirection);
    }
    Ok(a.cross(&b).norm().atan2(a.dot(&b)).to_degrees())
}

/// Length of the Great Circle arc between `p` and `q`: `(α/360)·2πR`.
pub fn great_circle_distance(p: LatLon, q: LatLon, cfg: SphereConfig) -> f64 {
    let a = to_cartesian(p, SphereConfig::UNIT);
    let b = to_cartesian(q, SphereConfig::UNIT);
    let alpha = a.cross(&b).norm().atan2(a.dot(&b));
    alpha * cfg.radius_km
}

/// Angle opposite side `l3` in a planar triangle with sides `l1`, `l2`, `l3`.
pub fn law_of_cosines_angle(l1: f64, l2: f64, l3: f64) -> Result<f64> {
    if !(l1.is_finite() && l2.is_finite() && l3.is_finite()) {
        return Err(Error::NonFinite);
    }
    if l1 <= 0.0 || l2 <= 0.0 || l3 < 0.0 {
        return Err(Error::NotATriangle(l1, l2, l3));
    }
    let cos = (l1 * l1 + l2 * l2 - l3 * l3) / (2.0 * l1 * l2);
    if !(-1.0 - COSINE_SLACK..=1.0 + COSINE_SLACK).contains(&cos) {
        return Err(Error::NotATriangle(l1, l2, l3));
    }
    Ok(cos.clamp(-1.0, 1.0).acos().to_degrees())
}

/// Point where the normal of the Great Circle through `a` and `b` leaves the
/// sphere, following the right-hand rule from `a` to `b`.
pub fn great_circle_pole(a: LatLon, b: LatLon) -> Result<LatLon> {
    let n = to_cartesian(a, SphereConfig::UNIT).cross(&to_cartesian(b, SphereConfig::UNIT));
    if n.norm() < 1e-12 {
        return Err(Error::DegenerateDirection);
    }
    to_latlon(n, SphereConfig::UNIT)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ll(lat: f64, lon: f64) -> LatLon {
        LatLon::new(lat, lon).unwrap()
    }

    fn assert_vec_close(v: Vec3, expected: (f64, f64, f64), tol: f64) {
        assert!(
            (v.x - expected.0).abs() <= tol
                && (v.y - expected.1).abs() <= tol
                && (v.z - expected.2).abs() <= tol,
            "{v:?} vs {expected:?}"
        );
    }

    #[test]
    fn longitude_is_normalized() {
        assert_eq!(ll(0.0, 180.0).lon(), 180.0);
        assert_eq!(ll(0.0, -180.0).lon(), 180.0);
        assert_eq!(ll(0.0, 270.0).lon(), -90.0);
        assert_eq!(ll(0.0, -74.0).lon(), -74.0);
    }

    #[test]
    fn latitude_out_of_range() {
        assert!(matches!(
            LatLon::new(90.5, 0.0),
            Err(Error::LatitudeOutOfRange(_))
        ));
        assert!(matches!(LatLon::new(f64::NAN, 0.0), Err(Error::NonFinite)));
    }

    #[test]
    fn radius_must_be_positive() {
        assert!(SphereConfig::new(0.0).is_err());
        assert!(SphereConfig::new(-1.0).is_err());
        assert_eq!(SphereConfig::default().radius(), 6378.0);
    }

    #[test]
    fn cartesian_examples() {
        let e = SphereConfig::EARTH;
        assert_vec_close(
            to_cartesian(ll(41.0, -74.0), e),
            (1327.0, -4627.0, 4184.0),
            1.0,
        );
        assert_vec_close(
            to_cartesian(ll(28.0, -81.0), e),
            (881.0, -5562.0, 2994.0),
            1.0,
        );
        assert_vec_close(to_cartesian(ll(90.0, 37.0), e), (0.0, 0.0, 6378.0), 1e-9);
    }

    #[test]
    fn latlon_examples() {
        let e = SphereConfig::EARTH;
        let pole = to_latlon(Vec3::new(0.0, 0.0, 6378.0), e).unwrap();
        assert_eq!((pole.lat(), pole.lon()), (90.0, 0.0));
        let nyc = to_latlon(Vec3::new(1327.0, -4627.0, 4184.0), e).unwrap();
        assert!((nyc.lat() - 41.0).abs() < 0.05 && (nyc.lon() + 74.0).abs() < 0.05);
        let origin = to_latlon(Vec3::new(6378.0, 0.0, 0.0), e).unwrap();
        assert_eq!((origin.lat(), origin.lon()), (0.0, 0.0));
        assert!(matches!(
            to_latlon(Vec3::default(), e),
            Err(Error::DegenerateDirection)
        ));
    }

    #[test]
    fn dot_examples() {
        assert_eq!(dot(Vec3::new(1.0, 0.0, 0.0), Vec3::new(0.0, 1.0, 0.0)), 0.0);
        let nyc = Vec3::new(1327.0, -4627.0, 4184.0);
        let paris = Vec3::new(4179.0, 219.0, 4814.0);
        assert!((dot(nyc, paris) / (6378.0 * 6378.0) - 0.6065).abs() < 5e-4);
        let v = Vec3::new(3.0, -4.0, 12.0);
        assert_eq!(dot(v, v), 169.0);
    }

    #[test]
    fn cross_examples() {
        let z = cross(Vec3::new(1.0, 0.0, 0.0), Vec3::new(0.0, 1.0, 0.0));
        assert_eq!(z, Vec3::new(0.0, 0.0, 1.0));
        let p = great_circle_pole(ll(28.0, -81.0), ll(18.0, -66.0)).unwrap();
        assert!((p.lat() - 48.0).abs() <= 1.0 && (p.lon() - 45.0).abs() <= 1.0);
        let p = great_circle_pole(ll(32.0, -65.0), ll(28.0, -81.0)).unwrap();
        assert!((p.lat() + 56.0).abs() <= 1.0 && (p.lon() + 43.0).abs() <= 1.0);
    }

    #[test]
    fn central_angle_examples() {
        let e = SphereConfig::EARTH;
        let nyc = to_cartesian(ll(41.0, -74.0), e);
        let paris = to_cartesian(ll(49.0, 3.0), e);
        assert!((central_angle(nyc, paris).unwrap() - 52.66).abs() < 0.05);
        assert_eq!(central_angle(nyc, nyc).unwrap(), 0.0);
        assert!((central_angle(nyc, -nyc).unwrap() - 180.0).abs() < 1e-12);
        assert!(central_angle(nyc, Vec3::default()).is_err());
    }

    #[test]
    fn distance_examples() {
        let e = SphereConfig::EARTH;
        let nyc = ll(41.0, -74.0);
        let d = great_circle_distance(nyc, ll(49.0, 3.0), e);
        assert!((d - 5862.0).abs() < 10.0, "{d}");
        assert_eq!(great_circle_distance(nyc, nyc, e), 0.0);
        let quarter = great_circle_distance(ll(0.0, 0.0), ll(0.0, 90.0), e);
        assert!((quarter - std::f64::consts::FRAC_PI_2 * 6378.0).abs() < 1e-9);
        assert!((quarter - 10019.0).abs() < 1.0);
        let half = great_circle_distance(ll(0.0, 0.0), ll(0.0, 180.0), e);
        assert!((half - std::f64::consts::PI * 6378.0).abs() < 1e-9);
    }

    #[test]
    fn law_of_cosines_examples() {
        let e = SphereConfig::EARTH;
        let nyc = to_cartesian(ll(41.0, -74.0), e);
        let paris = to_cartesian(ll(49.0, 3.0), e);
        let alpha = law_of_cosines_angle(6378.0, 6378.0, (nyc - paris).norm()).unwrap();
        assert!((alpha - 52.66).abs() < 0.05);
        assert!((law_of_cosines_angle(1.0, 1.0, 2f64.sqrt()).unwrap() - 90.0).abs() < 1e-12);
        assert_eq!(law_of_cosines_angle(1.0, 1.0, 0.0).unwrap(), 0.0);
        assert!(matches!(
            law_of_cosines_angle(1.0, 1.0, 3.0),
            Err(Error::NotATriangle(..))
        ));
    }
}
