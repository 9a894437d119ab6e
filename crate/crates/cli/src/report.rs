//! Command implementations and their text/JSON rendering.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use spherekit::{
    cap_area, central_angle, foucault_precession, great_circle_distance, great_circle_pole,
    heron_area, latitude_circle_holonomy, load_mesh, polygon_report, to_cartesian,
    transport_polygon, CanonicalMesh, Genus, GeodesicPolygon, LatLon, SurfaceMesh, TransportWalk,
};

use crate::places::Place;
use crate::{Format, RunConfig};

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

fn emit<T: Serialize>(cfg: &RunConfig, value: &T, text: impl FnOnce() -> String) -> Result<String> {
    match cfg.format {
        Format::Json => json(value),
        Format::Text => Ok(text()),
    }
}

/// Integer with thousands separators, e.g. `1,211,458`.
fn grouped(x: f64) -> String {
    let n = x.round() as i64;
    let digits = n.unsigned_abs().to_string();
    let mut out = String::new();
    for (i, c) in digits.chars().enumerate() {
        if i > 0 && (digits.len() - i).is_multiple_of(3) {
            out.push(',');
        }
        out.push(c);
    }
    if n < 0 {
        out.insert(0, '-');
    }
    out
}

fn compass(p: LatLon, digits: usize) -> String {
    let ns = if p.lat() < 0.0 { 'S' } else { 'N' };
    let ew = if p.lon() < 0.0 { 'W' } else { 'E' };
    format!(
        "{:.d$}°{ns}, {:.d$}°{ew}",
        p.lat().abs(),
        p.lon().abs(),
        d = digits
    )
}

#[derive(Serialize)]
struct PlaceOut {
    name: String,
    lat: f64,
    lon: f64,
}

impl From<&Place> for PlaceOut {
    fn from(p: &Place) -> Self {
        PlaceOut {
            name: p.label.clone(),
            lat: p.at.lat(),
            lon: p.at.lon(),
        }
    }
}

#[derive(Serialize)]
struct CoordsOut {
    place: PlaceOut,
    radius_km: f64,
    x: f64,
    y: f64,
    z: f64,
}

pub fn coords(cfg: &RunConfig, place: &Place) -> Result<String> {
    let v = to_cartesian(place.at, cfg.sphere);
    let out = CoordsOut {
        place: place.into(),
        radius_km: cfg.sphere.radius(),
        x: v.x,
        y: v.y,
        z: v.z,
    };
    emit(cfg, &out, || {
        format!(
            "{} ({}): ({:.0}, {:.0}, {:.0}) km",
            place.label,
            compass(place.at, cfg.angle_digits(1)),
            v.x,
            v.y,
            v.z
        )
    })
}

#[derive(Serialize)]
struct DistanceOut {
    from: PlaceOut,
    to: PlaceOut,
    cos_alpha: f64,
    central_angle_deg: f64,
    distance_km: f64,
}

pub fn distance(cfg: &RunConfig, from: &Place, to: &Place) -> Result<String> {
    let a = to_cartesian(from.at, cfg.sphere);
    let b = to_cartesian(to.at, cfg.sphere);
    let alpha = central_angle(a, b)?;
    let out = DistanceOut {
        from: from.into(),
        to: to.into(),
        cos_alpha: a.dot(&b) / (a.norm() * b.norm()),
        central_angle_deg: alpha,
        distance_km: great_circle_distance(from.at, to.at, cfg.sphere),
    };
    emit(cfg, &out, || {
        format!(
            "{} -> {}: cos α = {:.4}, α = {:.d$}°, d = {:.0} km",
            from.label,
            to.label,
            out.cos_alpha,
            alpha,
            out.distance_km,
            d = cfg.angle_digits(2)
        )
    })
}

/// Builds the polygon, reversing it when the given order encloses more than
/// a hemisphere (unless `as_given`).
fn oriented(
    cfg: &RunConfig,
    mut places: Vec<Place>,
    as_given: bool,
) -> Result<(Vec<Place>, GeodesicPolygon, spherekit::PolygonReport, bool)> {
    let build = |places: &[Place]| -> Result<(GeodesicPolygon, spherekit::PolygonReport)> {
        let poly = GeodesicPolygon::new(places.iter().map(|p| p.at).collect(), cfg.sphere)
            .map_err(|e| describe_degenerate(e, places))?;
        let report = polygon_report(&poly)?;
        Ok((poly, report))
    };
    let (poly, report) = build(&places)?;
    if as_given || report.excess <= 360.0 + 1e-9 {
        return Ok((places, poly, report, false));
    }
    places.reverse();
    let (poly, report) = build(&places)?;
    Ok((places, poly, report, true))
}

fn describe_degenerate(e: spherekit::Error, places: &[Place]) -> anyhow::Error {
    match e {
        spherekit::Error::DegenerateSide(i, j) => anyhow::anyhow!(
            "degenerate side {} - {}: the points coincide or are antipodal",
            places[i].label,
            places[j].label
        ),
        other => other.into(),
    }
}

#[derive(Serialize)]
struct SideOut {
    from: String,
    to: String,
    length_km: f64,
    /// Where the right-handed normal of the side's Great Circle leaves the sphere.
    normal_exit: LatLon,
}

#[derive(Serialize)]
struct TriangleOut {
    vertices: Vec<PlaceOut>,
    reversed: bool,
    interior_angles_deg: Vec<f64>,
    angle_sum_deg: f64,
    excess_deg: f64,
    spherical_area_km2: f64,
    sides: Vec<SideOut>,
    planar_area_km2: f64,
    extra_area_km2: f64,
}

fn sides(places: &[Place], lengths: &[f64]) -> Result<Vec<SideOut>> {
    let n = places.len();
    (0..n)
        .map(|i| {
            let (a, b) = (&places[i], &places[(i + 1) % n]);
            Ok(SideOut {
                from: a.label.clone(),
                to: b.label.clone(),
                length_km: lengths[i],
                normal_exit: great_circle_pole(a.at, b.at)?,
            })
        })
        .collect()
}

pub fn triangle(cfg: &RunConfig, places: Vec<Place>, as_given: bool) -> Result<String> {
    let (places, _, r, reversed) = oriented(cfg, places, as_given)?;
    let s = &r.side_lengths;
    let planar = heron_area(s[0], s[1], s[2])?;
    let out = TriangleOut {
        vertices: places.iter().map(Into::into).collect(),
        reversed,
        interior_angles_deg: r.interior_angles.clone(),
        angle_sum_deg: r.angle_sum,
        excess_deg: r.excess,
        spherical_area_km2: r.spherical_area,
        sides: sides(&places, s)?,
        planar_area_km2: planar,
        extra_area_km2: r.spherical_area - planar,
    };
    emit(cfg, &out, || {
        let d = cfg.angle_digits(1);
        let width = places
            .iter()
            .map(|p| p.label.len())
            .max()
            .unwrap_or(0)
            .max(5);
        let mut t = String::new();
        if reversed {
            t.push_str("(vertex order reversed to enclose the smaller region)\n");
        }
        for (p, a) in places.iter().zip(&r.interior_angles) {
            let _ = writeln!(t, "{:<width$}  {:>7.d$}°", p.label, a);
        }
        let _ = writeln!(t, "{:<width$}  {:>7.d$}°", "TOTAL", r.angle_sum);
        let _ = writeln!(t, "excess: {:.d$}°", r.excess);
        let _ = writeln!(t, "spherical area: {} km²", grouped(r.spherical_area));
        for side in &out.sides {
            let _ = writeln!(
                t,
                "{} - {}: {:.0} km (normal exits at {})",
                side.from,
                side.to,
                side.length_km,
                compass(side.normal_exit, 0)
            );
        }
        let _ = writeln!(t, "planar (Heron) area: {} km²", grouped(planar));
        let _ = write!(
            t,
            "extra area on the sphere: {} km²",
            grouped(out.extra_area_km2)
        );
        t
    })
}

#[derive(Serialize)]
struct PolygonOut {
    vertices: Vec<PlaceOut>,
    reversed: bool,
    interior_angles_deg: Vec<f64>,
    angle_sum_deg: f64,
    excess_deg: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    wheel_readings_deg: Option<Vec<f64>>,
    holonomy_raw_deg: f64,
    holonomy_reduced_deg: f64,
    area_km2: f64,
    side_lengths_km: Vec<f64>,
}

pub fn polygon(
    cfg: &RunConfig,
    places: Vec<Place>,
    as_given: bool,
    walk_steps: bool,
) -> Result<String> {
    let (places, _, r, reversed) = oriented(cfg, places, as_given)?;
    let holonomy = transport_polygon(&r.interior_angles)?;
    let readings = if walk_steps {
        let mut walk = TransportWalk::new();
        for &a in &r.interior_angles {
            walk.turn(a)?;
        }
        Some(walk.wheel_readings().to_vec())
    } else {
        None
    };
    let area = spherekit::area_from_holonomy(holonomy.raw, cfg.sphere);
    let out = PolygonOut {
        vertices: places.iter().map(Into::into).collect(),
        reversed,
        interior_angles_deg: r.interior_angles.clone(),
        angle_sum_deg: r.angle_sum,
        excess_deg: r.excess,
        wheel_readings_deg: readings,
        holonomy_raw_deg: holonomy.raw,
        holonomy_reduced_deg: holonomy.reduced,
        area_km2: area,
        side_lengths_km: r.side_lengths.clone(),
    };
    emit(cfg, &out, || {
        let d = cfg.angle_digits(1);
        let width = places
            .iter()
            .map(|p| p.label.len())
            .max()
            .unwrap_or(0)
            .max(5);
        let mut t = String::new();
        if reversed {
            t.push_str("(vertex order reversed to enclose the smaller region)\n");
        }
        for (i, (p, a)) in places.iter().zip(&r.interior_angles).enumerate() {
            let _ = write!(t, "{:<width$}  {:>7.d$}°", p.label, a);
            if let Some(readings) = &out.wheel_readings_deg {
                let _ = write!(t, "   wheel {:>8.d$}°", readings[i]);
            }
            t.push('\n');
        }
        let _ = writeln!(t, "{:<width$}  {:>7.d$}°", "TOTAL", r.angle_sum);
        let _ = writeln!(
            t,
            "holonomy: θ = {:.d$}° (reduced {:.d$}°)",
            holonomy.raw, holonomy.reduced
        );
        let _ = write!(t, "area: {} km²", grouped(area));
        t
    })
}

#[derive(Serialize)]
struct FoucaultOut {
    latitude_deg: f64,
    precession_deg: f64,
    magnitude_deg: f64,
    sense: &'static str,
    cap_area_km2: f64,
    holonomy_raw_deg: f64,
    holonomy_reduced_deg: f64,
}

pub fn foucault(cfg: &RunConfig, lat: f64) -> Result<String> {
    let precession = foucault_precession(lat)?;
    let cap = cap_area(lat, cfg.sphere)?;
    let h = latitude_circle_holonomy(lat, cfg.sphere)?;
    let sense = if precession > 0.0 {
        "clockwise"
    } else if precession < 0.0 {
        "counterclockwise"
    } else {
        "none"
    };
    let out = FoucaultOut {
        latitude_deg: lat,
        precession_deg: precession,
        magnitude_deg: precession.abs(),
        sense,
        cap_area_km2: cap,
        holonomy_raw_deg: h.raw,
        holonomy_reduced_deg: h.reduced,
    };
    emit(cfg, &out, || {
        let d = cfg.angle_digits(1);
        let mut t = String::new();
        if precession == 0.0 {
            t.push_str("precession: 0° — pendulum plane does not rotate\n");
        } else {
            let hemisphere = if lat > 0.0 { "northern" } else { "southern" };
            let _ = writeln!(
                t,
                "precession: ≈ {:.0}° per day ({:.d$}°), {sense} seen from above ({hemisphere} hemisphere)",
                precession.abs(),
                precession.abs()
            );
        }
        let _ = writeln!(t, "cap area north of latitude: {} km²", grouped(cap));
        let _ = write!(
            t,
            "holonomy of the latitude circle: θ = {:.d$}° (reduced {:.d$}°)",
            h.raw, h.reduced
        );
        t
    })
}

#[derive(Serialize)]
struct MeshOut {
    mesh: String,
    vertices: usize,
    edges: usize,
    faces: usize,
    chi: i64,
    genus: Genus,
    orientable: bool,
    face_size_histogram: BTreeMap<usize, usize>,
    sum_face_sizes: usize,
    twice_edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    total_excess_deg: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertex_angle_sums_deg: Option<Vec<f64>>,
}

fn load(name: &str, n: Option<usize>, m: Option<usize>) -> Result<(String, SurfaceMesh)> {
    let path = Path::new(name);
    if path.extension().is_some_and(|e| e == "json") || path.is_file() {
        let data =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let mesh = load_mesh(&data).with_context(|| format!("mesh {}", path.display()))?;
        return Ok((name.to_string(), mesh));
    }
    let mut kind: CanonicalMesh = name.parse()?;
    if let CanonicalMesh::TorusGrid { n: dn, m: dm } = kind {
        kind = CanonicalMesh::TorusGrid {
            n: n.unwrap_or(dn),
            m: m.unwrap_or(dm),
        };
    } else if n.is_some() || m.is_some() {
        anyhow::bail!("--n and --m only apply to torus-grid");
    }
    Ok((kind.to_string(), kind.build()?))
}

pub fn mesh(
    cfg: &RunConfig,
    name: &str,
    n: Option<usize>,
    m: Option<usize>,
    dump: bool,
) -> Result<String> {
    let (label, mesh) = load(name, n, m)?;
    if dump {
        return json(&mesh.to_document());
    }
    let report = spherekit::euler_characteristic(&mesh);
    let (sum, twice) = spherekit::edge_double_count_check(&mesh);
    let (total, sums) = if mesh.positions().is_some() {
        (
            Some(spherekit::angle_sum_identity_check(&mesh, cfg.sphere)?),
            Some(spherekit::vertex_angle_sum_check(&mesh, cfg.sphere)?),
        )
    } else {
        (None, None)
    };
    let out = MeshOut {
        mesh: label,
        vertices: report.vertices,
        edges: report.edges,
        faces: report.faces,
        chi: report.chi,
        genus: report.genus,
        orientable: mesh.is_orientable(),
        face_size_histogram: report.face_size_histogram.clone(),
        sum_face_sizes: sum,
        twice_edges: twice,
        total_excess_deg: total,
        vertex_angle_sums_deg: sums,
    };
    emit(cfg, &out, || {
        let d = cfg.angle_digits(0);
        let mark = if sum == twice { "✓" } else { "✗" };
        let relation = if sum == twice { "=" } else { "≠" };
        let mut t = format!(
            "V={} F={} E={} χ={} genus={}; ΣE_f={sum}{relation}2E {mark}",
            report.vertices, report.faces, report.edges, report.chi, report.genus
        );
        if let Some(total) = total {
            let _ = write!(t, "; total excess {total:.d$}°");
        }
        let faces: Vec<String> = report
            .face_size_histogram
            .iter()
            .map(|(size, count)| format!("{count}×{size}-gon"))
            .collect();
        let _ = write!(t, "\nfaces: {}", faces.join(", "));
        if let Some(sums) = &out.vertex_angle_sums_deg {
            let lo = sums.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = sums.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let _ = write!(
                t,
                "\nangles around each vertex: {lo:.p$}° to {hi:.p$}°",
                p = cfg.angle_digits(3)
            );
        }
        t
    })
}
