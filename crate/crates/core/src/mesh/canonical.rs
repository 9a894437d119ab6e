//! Built-in meshes: the Platonic solids used as sphere coverings, the
//! truncated icosahedron (soccer ball), and two combinatorial surfaces of
//! higher genus.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::SurfaceMesh;
use crate::geometry::Vec3;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CanonicalMesh {
    Tetrahedron,
    Cube,
    Octahedron,
    Icosahedron,
    /// 12 pentagons and 20 hexagons: the icosahedron with its corners cut off.
    TruncatedIcosahedron,
    /// `n × m` quads on a torus. Combinatorial only.
    TorusGrid {
        n: usize,
        m: usize,
    },
    /// Two 3 × 3 torus grids joined along a removed square. Combinatorial only.
    DoubleTorus,
}

impl CanonicalMesh {
    pub const SPHERICAL: [CanonicalMesh; 5] = [
        CanonicalMesh::Tetrahedron,
        CanonicalMesh::Cube,
        CanonicalMesh::Octahedron,
        CanonicalMesh::Icosahedron,
        CanonicalMesh::TruncatedIcosahedron,
    ];

    pub fn build(&self) -> Result<SurfaceMesh> {
        match *self {
            CanonicalMesh::Tetrahedron => tetrahedron(),
            CanonicalMesh::Cube => cube(),
            CanonicalMesh::Octahedron => octahedron(),
            CanonicalMesh::Icosahedron => icosahedron(),
            CanonicalMesh::TruncatedIcosahedron => truncated_icosahedron(),
            CanonicalMesh::TorusGrid { n, m } => torus_grid(n, m),
            CanonicalMesh::DoubleTorus => double_torus(),
        }
    }
}

impl fmt::Display for CanonicalMesh {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalMesh::Tetrahedron => f.write_str("tetrahedron"),
            CanonicalMesh::Cube => f.write_str("cube"),
            CanonicalMesh::Octahedron => f.write_str("octahedron"),
            CanonicalMesh::Icosahedron => f.write_str("icosahedron"),
            CanonicalMesh::TruncatedIcosahedron => f.write_str("truncated_icosahedron"),
            CanonicalMesh::TorusGrid { n, m } => write!(f, "torus_grid({n},{m})"),
            CanonicalMesh::DoubleTorus => f.write_str("genus2_double_torus"),
        }
    }
}

impl FromStr for CanonicalMesh {
    type Err = Error;

    /// Accepts the display names, with `-` and `_` interchangeable, plus the
    /// aliases `soccer_ball` and `double_torus`. A bare `torus_grid` is 4 × 4.
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        let mesh = match key.as_str() {
            "tetrahedron" => CanonicalMesh::Tetrahedron,
            "cube" | "hexahedron" => CanonicalMesh::Cube,
            "octahedron" => CanonicalMesh::Octahedron,
            "icosahedron" => CanonicalMesh::Icosahedron,
            "truncated_icosahedron" | "soccer_ball" | "soccerball" => {
                CanonicalMesh::TruncatedIcosahedron
            }
            "genus2_double_torus" | "double_torus" => CanonicalMesh::DoubleTorus,
            "torus_grid" | "torus" => CanonicalMesh::TorusGrid { n: 4, m: 4 },
            _ => {
                let args = key
                    .strip_prefix("torus_grid(")
                    .and_then(|rest| rest.strip_suffix(')'))
                    .ok_or_else(|| Error::UnknownMesh(s.to_string()))?;
                let (n, m) = args
                    .split_once(',')
                    .ok_or_else(|| Error::UnknownMesh(s.to_string()))?;
                let parse = |t: &str| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::UnknownMesh(s.to_string()))
                };
                CanonicalMesh::TorusGrid {
                    n: parse(n)?,
                    m: parse(m)?,
                }
            }
        };
        Ok(mesh)
    }
}

pub fn canonical_mesh(name: &str) -> Result<SurfaceMesh> {
    name.parse::<CanonicalMesh>()?.build()
}

/// Projects `points` onto the unit sphere and winds every face
/// counterclockwise seen from outside.
fn convex_mesh(points: Vec<Vec3>, mut faces: Vec<Vec<usize>>) -> Result<SurfaceMesh> {
    let points: Vec<Vec3> = points
        .iter()
        .map(|p| p.normalized().ok_or(Error::DegenerateDirection))
        .collect::<Result<_>>()?;
    for face in &mut faces {
        let mut normal = Vec3::default();
        let mut centroid = Vec3::default();
        for (i, &v) in face.iter().enumerate() {
            let next = face[(i + 1) % face.len()];
            normal = normal + points[v].cross(&points[next]);
            centroid = centroid + points[v];
        }
        if normal.dot(&centroid) < 0.0 {
            face.reverse();
        }
    }
    SurfaceMesh::new(points.len(), Some(points), faces)
}

fn tetrahedron() -> Result<SurfaceMesh> {
    let points = vec![
        Vec3::new(1.0, 1.0, 1.0),
        Vec3::new(1.0, -1.0, -1.0),
        Vec3::new(-1.0, 1.0, -1.0),
        Vec3::new(-1.0, -1.0, 1.0),
    ];
    let faces = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
    convex_mesh(points, faces)
}

fn cube() -> Result<SurfaceMesh> {
    // Vertex index bits are (x, y, z), a set bit meaning +1.
    let points = (0..8)
        .map(|i| {
            let s = |bit: usize| if i & bit != 0 { 1.0 } else { -1.0 };
            Vec3::new(s(4), s(2), s(1))
        })
        .collect();
    let faces = vec![
        vec![0, 1, 3, 2],
        vec![4, 5, 7, 6],
        vec![0, 1, 5, 4],
        vec![2, 3, 7, 6],
        vec![0, 2, 6, 4],
        vec![1, 3, 7, 5],
    ];
    convex_mesh(points, faces)
}

fn octahedron() -> Result<SurfaceMesh> {
    let points = vec![
        Vec3::new(1.0, 0.0, 0.0),
        Vec3::new(-1.0, 0.0, 0.0),
        Vec3::new(0.0, 1.0, 0.0),
        Vec3::new(0.0, -1.0, 0.0),
        Vec3::new(0.0, 0.0, 1.0),
        Vec3::new(0.0, 0.0, -1.0),
    ];
    let mut faces = Vec::new();
    for x in [0, 1] {
        for y in [2, 3] {
            for z in [4, 5] {
                faces.push(vec![x, y, z]);
            }
        }
    }
    convex_mesh(points, faces)
}

fn icosahedron_parts() -> (Vec<Vec3>, Vec<Vec<usize>>) {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut points = Vec::with_capacity(12);
    for a in [-1.0, 1.0] {
        for b in [-phi, phi] {
            points.push(Vec3::new(0.0, a, b));
            points.push(Vec3::new(a, b, 0.0));
            points.push(Vec3::new(b, 0.0, a));
        }
    }
    // Edges have length 2; every other pair is farther apart.
    let adjacent = |i: usize, j: usize| ((points[i] - points[j]).norm() - 2.0).abs() < 1e-9;
    let mut faces = Vec::with_capacity(20);
    for i in 0..12 {
        for j in i + 1..12 {
            for k in j + 1..12 {
                if adjacent(i, j) && adjacent(j, k) && adjacent(i, k) {
                    faces.push(vec![i, j, k]);
                }
            }
        }
    }
    (points, faces)
}

fn icosahedron() -> Result<SurfaceMesh> {
    let (points, faces) = icosahedron_parts();
    convex_mesh(points, faces)
}

/// Cuts every icosahedron edge into thirds; the points nearest each corner
/// bound a pentagon, and each triangle keeps a hexagon.
fn truncated_icosahedron() -> Result<SurfaceMesh> {
    let ico = icosahedron()?;
    let corners = ico.positions().ok_or(Error::MissingPositions)?;

    let mut points = Vec::with_capacity(60);
    let mut near: HashMap<(usize, usize), usize> = HashMap::new();
    let mut cut = |a: usize, b: usize, points: &mut Vec<Vec3>| -> usize {
        *near.entry((a, b)).or_insert_with(|| {
            points.push((corners[a] * 2.0 + corners[b]) * (1.0 / 3.0));
            points.len() - 1
        })
    };

    let mut faces = Vec::with_capacity(32);
    for tri in ico.faces() {
        let [a, b, c] = [tri[0], tri[1], tri[2]];
        faces.push(vec![
            cut(a, b, &mut points),
            cut(b, a, &mut points),
            cut(b, c, &mut points),
            cut(c, b, &mut points),
            cut(c, a, &mut points),
            cut(a, c, &mut points),
        ]);
    }
    for v in 0..ico.vertex_count() {
        // Walk the link of v: each face (v, a, b) steps from a to b.
        let mut step = HashMap::new();
        for tri in ico.faces() {
            if let Some(i) = tri.iter().position(|&u| u == v) {
                step.insert(tri[(i + 1) % 3], tri[(i + 2) % 3]);
            }
        }
        let start = *step.keys().min().unwrap();
        let mut ring = vec![start];
        let mut u = step[&start];
        while u != start {
            ring.push(u);
            u = step[&u];
        }
        faces.push(ring.into_iter().map(|u| cut(v, u, &mut points)).collect());
    }
    convex_mesh(points, faces)
}

fn torus_faces(n: usize, m: usize) -> Vec<Vec<usize>> {
    let id = |i: usize, j: usize| (i % n) * m + (j % m);
    let mut faces = Vec::with_capacity(n * m);
    for i in 0..n {
        for j in 0..m {
            faces.push(vec![id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)]);
        }
    }
    faces
}

fn torus_grid(n: usize, m: usize) -> Result<SurfaceMesh> {
    if n < 3 || m < 3 {
        return Err(Error::MeshParameters(format!(
            "torus grid needs at least 3 × 3 cells, got {n} × {m}"
        )));
    }
    SurfaceMesh::new(n * m, None, torus_faces(n, m))
}

fn double_torus() -> Result<SurfaceMesh> {
    // Drop the first square of two 3 × 3 torus grids and glue the holes with
    // opposite windings so the result stays orientable.
    let mut left = torus_faces(3, 3);
    let hole = left.remove(0);
    let mut right = torus_faces(3, 3);
    let other_hole = right.remove(0);

    let mut relabel: Vec<Option<usize>> = vec![None; 9];
    for k in 0..4 {
        relabel[other_hole[k]] = Some(hole[(4 - k) % 4]);
    }
    let mut next = 9;
    for slot in relabel.iter_mut().filter(|s| s.is_none()) {
        *slot = Some(next);
        next += 1;
    }
    left.extend(
        right
            .into_iter()
            .map(|face| face.into_iter().map(|v| relabel[v].unwrap()).collect()),
    );
    SurfaceMesh::new(next, None, left)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{euler_characteristic, Genus};

    fn counts(m: &SurfaceMesh) -> (usize, usize, usize, i64) {
        (
            m.vertex_count(),
            m.edge_count(),
            m.face_count(),
            m.euler_characteristic(),
        )
    }

    #[test]
    fn platonic_counts() {
        assert_eq!(
            counts(&canonical_mesh("tetrahedron").unwrap()),
            (4, 6, 4, 2)
        );
        assert_eq!(counts(&canonical_mesh("cube").unwrap()), (8, 12, 6, 2));
        assert_eq!(
            counts(&canonical_mesh("octahedron").unwrap()),
            (6, 12, 8, 2)
        );
        assert_eq!(
            counts(&canonical_mesh("icosahedron").unwrap()),
            (12, 30, 20, 2)
        );
    }

    #[test]
    fn soccer_ball() {
        let m = canonical_mesh("soccer-ball").unwrap();
        assert_eq!(counts(&m), (60, 90, 32, 2));
        let r = euler_characteristic(&m);
        assert_eq!(r.face_size_histogram.get(&5), Some(&12));
        assert_eq!(r.face_size_histogram.get(&6), Some(&20));
        for p in m.positions().unwrap() {
            assert!((p.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn higher_genus() {
        let torus = canonical_mesh("torus_grid(4,4)").unwrap();
        assert_eq!(counts(&torus), (16, 32, 16, 0));
        assert_eq!(euler_characteristic(&torus).genus, Genus::Orientable(1));

        let double = canonical_mesh("genus2_double_torus").unwrap();
        assert_eq!(double.euler_characteristic(), -2);
        assert_eq!(euler_characteristic(&double).genus, Genus::Orientable(2));
        assert!(double.positions().is_none());
    }

    #[test]
    fn names() {
        assert_eq!(
            "Torus-Grid(5, 3)".parse::<CanonicalMesh>().unwrap(),
            CanonicalMesh::TorusGrid { n: 5, m: 3 }
        );
        for mesh in CanonicalMesh::SPHERICAL {
            assert_eq!(mesh.to_string().parse::<CanonicalMesh>().unwrap(), mesh);
        }
        assert!(matches!(
            canonical_mesh("dodecahedron"),
            Err(Error::UnknownMesh(_))
        ));
        assert!(matches!(
            canonical_mesh("torus_grid(2,4)"),
            Err(Error::MeshParameters(_))
        ));
    }
}
