//! Parallel transport around closed paths.
//!
//! Carrying a frictionless wheel around a geodesic polygon and turning left
//! by `180° − α` at each corner leaves it rotated by
//!
//! ```text
//! θ = (N − 2)·180° − (α₁ + … + α_N)
//! ```
//!
//! once the walker faces its starting direction again. The rotation is the
//! negative of the spherical excess, so `A = R²·(−θ)·(2π/360)`.
//!
//! Every result keeps the raw accumulated angle, which still carries whole
//! turns and so the full area, next to a reduced reading in `[0°, 360°)`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::geometry::{LatLon, SphereConfig};
use crate::polygon::GeodesicPolygon;
use crate::{Error, Result};

/// Accumulated parallel-transport angle, in degrees.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Holonomy {
    pub raw: f64,
    pub reduced: f64,
}

impl Holonomy {
    pub fn from_raw(raw: f64) -> Self {
        Self {
            raw,
            reduced: reduce_turn(raw),
        }
    }
}

/// Representative of `deg` modulo 360 in `[0, 360)`.
fn reduce_turn(deg: f64) -> f64 {
    // adding 0.0 turns the -0.0 left by exact negative multiples into 0.0
    let r = deg.rem_euclid(360.0) + 0.0;
    // rem_euclid of a tiny negative rounds up to exactly 360.0
    if r >= 360.0 {
        0.0
    } else {
        r
    }
}

/// Representative of `deg` modulo 360 in `(-180, 180]`, as read off the wheel.
fn reduce_wheel(deg: f64) -> f64 {
    180.0 - (180.0 - deg).rem_euclid(360.0)
}

/// Step-by-step record of a walk with the parallel transporter.
///
/// Each turn at a corner with interior angle `α` moves the wheel reading on
/// by `180° − α`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct TransportWalk {
    turn_angles: Vec<f64>,
    wheel_readings: Vec<f64>,
}

impl TransportWalk {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn turn(&mut self, interior_angle: f64) -> Result<f64> {
        if !(interior_angle > 0.0 && interior_angle < 360.0) {
            return Err(Error::AngleOutOfRange(interior_angle));
        }
        let reading = self.raw_reading() + (180.0 - interior_angle);
        self.turn_angles.push(interior_angle);
        self.wheel_readings.push(reading);
        Ok(reading)
    }

    pub fn turn_angles(&self) -> &[f64] {
        &self.turn_angles
    }

    /// Raw readings after each turn, whole turns included.
    pub fn wheel_readings(&self) -> &[f64] {
        &self.wheel_readings
    }

    pub fn raw_reading(&self) -> f64 {
        self.wheel_readings.last().copied().unwrap_or(0.0)
    }

    /// Current reading in `(-180°, 180°]`.
    pub fn reading(&self) -> f64 {
        reduce_wheel(self.raw_reading())
    }

    /// Net rotation after closing the loop. Walking around the loop also
    /// turns the walker through one full turn, which is removed here.
    pub fn holonomy(&self) -> Result<Holonomy> {
        if self.turn_angles.len() < 3 {
            return Err(Error::TooFewVertices(self.turn_angles.len()));
        }
        Ok(Holonomy::from_raw(self.raw_reading() - 360.0))
    }
}

/// Accumulated angle after walking a geodesic polygon with the given
/// interior angles.
pub fn transport_polygon(interior_angles: &[f64]) -> Result<Holonomy> {
    let mut walk = TransportWalk::new();
    for &a in interior_angles {
        walk.turn(a)?;
    }
    walk.holonomy()
}

pub fn area_from_holonomy(theta: f64, cfg: SphereConfig) -> f64 {
    let r = cfg.radius();
    r * r * (-theta).to_radians()
}

pub fn holonomy_from_area(area: f64, cfg: SphereConfig) -> Holonomy {
    let r = cfg.radius();
    Holonomy::from_raw(-(area / (r * r)).to_degrees())
}

fn check_latitude(lat: f64) -> Result<()> {
    if !lat.is_finite() {
        Err(Error::NonFinite)
    } else if !(-90.0..=90.0).contains(&lat) {
        Err(Error::LatitudeOutOfRange(lat))
    } else {
        Ok(())
    }
}

/// Area of the polar cap north of latitude `lat`: `2πR²(1 − sin(lat))`.
pub fn cap_area(lat: f64, cfg: SphereConfig) -> Result<f64> {
    check_latitude(lat)?;
    let r = cfg.radius();
    Ok(2.0 * PI * r * r * (1.0 - lat.to_radians().sin()))
}

/// Daily rotation of a Foucault pendulum's swing plane: `360°·sin(lat)`.
///
/// Signed: positive north of the equator, negative south of it.
pub fn foucault_precession(lat: f64) -> Result<f64> {
    check_latitude(lat)?;
    Ok(360.0 * lat.to_radians().sin())
}

/// Holonomy of one trip around the circle of latitude `lat`, travelling
/// east with the polar cap on the left.
///
/// The raw angle comes from the cap area, `360°·(sin(lat) − 1)`. The reduced
/// reading is the Foucault value `360°·sin(lat)` brought into `[0°, 360°]`;
/// the pole itself reads a full 360°.
pub fn latitude_circle_holonomy(lat: f64, cfg: SphereConfig) -> Result<Holonomy> {
    let raw = holonomy_from_area(cap_area(lat, cfg)?, cfg).raw;
    let turn = foucault_precession(lat)?;
    let reduced = if turn < 0.0 { turn + 360.0 } else { turn };
    Ok(Holonomy { raw, reduced })
}

/// Holonomy of a closed curve approximated by short Great Circle segments.
/// The enclosed region must lie to the left of the direction of travel.
pub fn smooth_curve_holonomy(curve: &[LatLon], cfg: SphereConfig) -> Result<Holonomy> {
    let poly = GeodesicPolygon::new(curve.to_vec(), cfg)?;
    transport_polygon(&poly.interior_angles()?)
}

/// `n` equally spaced points on the circle of latitude `lat`, ordered east.
pub fn latitude_circle_polygon(lat: f64, n: usize) -> Result<Vec<LatLon>> {
    check_latitude(lat)?;
    (0..n)
        .map(|k| LatLon::new(lat, -180.0 + 360.0 * k as f64 / n as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::polygon_report;

    const EARTH: SphereConfig = SphereConfig::EARTH;

    #[test]
    fn wheel_readings_follow_the_turns() {
        let mut walk = TransportWalk::new();
        walk.turn(60.0).unwrap();
        assert_eq!(walk.reading(), 120.0);
        walk.turn(60.0).unwrap();
        assert_eq!(walk.wheel_readings(), &[120.0, 240.0]);
        assert_eq!(walk.reading(), -120.0);
        walk.turn(60.0).unwrap();
        assert_eq!(walk.raw_reading(), 360.0);
        assert_eq!(walk.reading(), 0.0);
        assert_eq!(walk.holonomy().unwrap().raw, 0.0);
        assert!(walk.turn(0.0).is_err());
        assert!(walk.turn(360.0).is_err());
    }

    #[test]
    fn transport_examples() {
        assert_eq!(transport_polygon(&[60.0, 70.0, 50.0]).unwrap().raw, 0.0);
        let octant = transport_polygon(&[90.0, 90.0, 90.0]).unwrap();
        assert_eq!(octant.raw, -90.0);
        assert_eq!(octant.reduced, 270.0);
        assert_eq!(transport_polygon(&[90.0; 4]).unwrap().raw, 0.0);
        assert!(matches!(
            transport_polygon(&[90.0, 90.0]),
            Err(Error::TooFewVertices(2))
        ));
    }

    #[test]
    fn area_holonomy_examples() {
        let r2 = 6378.0 * 6378.0;
        let a = area_from_holonomy(-90.0, EARTH);
        assert!((a / (4.0 * PI * r2 / 8.0) - 1.0).abs() < 1e-6);
        assert_eq!(area_from_holonomy(0.0, EARTH), 0.0);

        let back = holonomy_from_area(area_from_holonomy(-37.25, EARTH), EARTH);
        assert!((back.raw / -37.25 - 1.0).abs() < 1e-12);
        let whole = holonomy_from_area(4.0 * PI * r2, EARTH);
        assert!((whole.raw + 720.0).abs() < 1e-9);

        let paris = holonomy_from_area(cap_area(49.0, EARTH).unwrap(), EARTH);
        assert!((paris.reduced - 272.0).abs() < 0.5, "{paris:?}");
    }

    #[test]
    fn cap_area_examples() {
        let r2 = 6378.0 * 6378.0;
        assert!(cap_area(90.0, EARTH).unwrap().abs() < 1e-6);
        assert!((cap_area(0.0, EARTH).unwrap() / (2.0 * PI * r2) - 1.0).abs() < 1e-15);
        assert!((cap_area(-90.0, EARTH).unwrap() / (4.0 * PI * r2) - 1.0).abs() < 1e-15);
        assert!(cap_area(91.0, EARTH).is_err());
    }

    #[test]
    fn foucault_examples() {
        assert!((foucault_precession(49.0).unwrap() - 271.7).abs() < 0.5);
        assert_eq!(foucault_precession(90.0).unwrap(), 360.0);
        assert_eq!(foucault_precession(0.0).unwrap(), 0.0);
        assert_eq!(
            foucault_precession(-30.0).unwrap(),
            -foucault_precession(30.0).unwrap()
        );
        assert!(foucault_precession(-91.0).is_err());
    }

    #[test]
    fn latitude_circle_examples() {
        let h = latitude_circle_holonomy(49.0, EARTH).unwrap();
        assert!((h.raw + 88.3).abs() < 0.05 && (h.reduced - 271.7).abs() < 0.05);
        let pole = latitude_circle_holonomy(90.0, EARTH).unwrap();
        assert_eq!((pole.raw, pole.reduced), (0.0, 360.0));
        let equator = latitude_circle_holonomy(0.0, EARTH).unwrap();
        assert!((equator.raw + 360.0).abs() < 1e-12);
        assert_eq!(equator.reduced, 0.0);
    }

    #[test]
    fn smooth_curve_examples() {
        let curve = latitude_circle_polygon(49.0, 360).unwrap();
        let h = smooth_curve_holonomy(&curve, EARTH).unwrap();
        let exact = latitude_circle_holonomy(49.0, EARTH).unwrap();
        assert!((h.raw - exact.raw).abs() < 0.5);

        for n in [3, 4, 7, 64] {
            let h =
                smooth_curve_holonomy(&latitude_circle_polygon(0.0, n).unwrap(), EARTH).unwrap();
            assert!((h.raw + 360.0).abs() < 1e-9, "{n}: {h:?}");
            assert!(h.reduced.abs() < 1e-9 || (h.reduced - 360.0).abs() < 1e-9);
        }

        let tri: Vec<LatLon> = [(28.0, -81.0), (18.0, -66.0), (32.0, -65.0)]
            .iter()
            .map(|&(a, b)| LatLon::new(a, b).unwrap())
            .collect();
        let h = smooth_curve_holonomy(&tri, EARTH).unwrap();
        let poly = GeodesicPolygon::new(tri, EARTH).unwrap();
        let oracle = transport_polygon(&poly.interior_angles().unwrap()).unwrap();
        assert!((h.raw - oracle.raw).abs() < 1e-6);
        let area = polygon_report(&poly).unwrap().spherical_area;
        assert!((area_from_holonomy(h.raw, EARTH) / area - 1.0).abs() < 1e-9);
    }
}
