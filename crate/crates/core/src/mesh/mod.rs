//! Polygonal coverings of closed surfaces.
//!
//! A [`SurfaceMesh`] is a list of faces, each a cycle of vertex indices, with
//! optional vertex positions. Edges are derived from the faces. A valid mesh
//! is a closed 2-manifold: every edge borders exactly two faces and the faces
//! around each vertex form a single fan.
//!
//! For such a mesh `χ = V + F − E` is a topological invariant, and for a
//! connected orientable surface `χ = 2 − 2g`.

mod canonical;
mod refine;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::geometry::{SphereConfig, Vec3};
use crate::polygon::interior_angle;
use crate::{Error, Result};

pub use canonical::{canonical_mesh, CanonicalMesh};

/// A closed polygonal surface with a derived edge set.
#[derive(Clone, Debug)]
pub struct SurfaceMesh {
    vertex_count: usize,
    positions: Option<Vec<Vec3>>,
    faces: Vec<Vec<usize>>,
    /// Unordered edges as `(min, max)`, sorted.
    edges: Vec<(usize, usize)>,
    orientable: bool,
    components: usize,
}

/// On-disk mesh document.
///
/// ```json
/// { "vertices": [[x, y, z], ...] | null, "vertex_count": 4, "faces": [[0, 1, 2], ...] }
/// ```
#[derive(Debug, Serialize, Deserialize)]
pub struct MeshDocument {
    #[serde(default)]
    pub vertices: Option<Vec<[f64; 3]>>,
    #[serde(default)]
    pub vertex_count: Option<usize>,
    pub faces: Vec<Vec<usize>>,
}

/// How strictly [`SurfaceMesh::build`] checks vertex stars.
#[derive(Clone, Copy, PartialEq, Eq)]
enum VertexRule {
    /// Every vertex is shared by at least three faces.
    Strict,
    /// Allow two-face vertices, as produced by subdividing an edge.
    AllowDegreeTwo,
}

impl SurfaceMesh {
    /// Validates a mesh from its faces and optional positions.
    pub fn new(
        vertex_count: usize,
        positions: Option<Vec<Vec3>>,
        faces: Vec<Vec<usize>>,
    ) -> Result<Self> {
        Self::build(vertex_count, positions, faces, VertexRule::Strict)
    }

    fn build(
        vertex_count: usize,
        positions: Option<Vec<Vec3>>,
        faces: Vec<Vec<usize>>,
        rule: VertexRule,
    ) -> Result<Self> {
        if let Some(p) = &positions {
            if p.len() != vertex_count {
                return Err(Error::PositionCountMismatch {
                    positions: p.len(),
                    count: vertex_count,
                });
            }
            if p.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFinite);
            }
        }
        for (f, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(Error::FaceTooSmall {
                    face: f,
                    len: face.len(),
                });
            }
            for (i, &v) in face.iter().enumerate() {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        face: f,
                        vertex: v,
                        count: vertex_count,
                    });
                }
                if face[..i].contains(&v) {
                    return Err(Error::RepeatedVertex { face: f, vertex: v });
                }
            }
        }

        // Faces on each undirected edge, with the direction each one runs it.
        let mut edge_faces: BTreeMap<(usize, usize), Vec<(usize, bool)>> = BTreeMap::new();
        for (f, face) in faces.iter().enumerate() {
            for (a, b) in cycle_pairs(face) {
                let forward = a < b;
                edge_faces
                    .entry((a.min(b), a.max(b)))
                    .or_default()
                    .push((f, forward));
            }
        }
        for (&(a, b), incident) in &edge_faces {
            if incident.len() != 2 {
                return Err(Error::NonManifoldEdge(a, b, incident.len()));
            }
        }

        let mut stars: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
        for (f, face) in faces.iter().enumerate() {
            for &v in face {
                stars[v].push(f);
            }
        }
        let min_degree = match rule {
            VertexRule::Strict => 3,
            VertexRule::AllowDegreeTwo => 2,
        };
        for (v, star) in stars.iter().enumerate() {
            if star.len() < min_degree {
                return Err(Error::LowVertexDegree {
                    vertex: v,
                    faces: star.len(),
                });
            }
        }
        check_fans(&faces, &stars, &edge_faces)?;

        let (orientable, components) = orient(faces.len(), &edge_faces);
        Ok(Self {
            vertex_count,
            positions,
            faces,
            edges: edge_faces.into_keys().collect(),
            orientable,
            components,
        })
    }

    pub fn from_document(doc: MeshDocument) -> Result<Self> {
        let positions: Option<Vec<Vec3>> = doc
            .vertices
            .map(|vs| vs.into_iter().map(|[x, y, z]| Vec3::new(x, y, z)).collect());
        let count = match (&positions, doc.vertex_count) {
            (Some(p), Some(n)) if p.len() != n => {
                return Err(Error::PositionCountMismatch {
                    positions: p.len(),
                    count: n,
                })
            }
            (_, Some(n)) => n,
            (Some(p), None) => p.len(),
            (None, None) => doc.faces.iter().flatten().max().map_or(0, |&m| m + 1),
        };
        Self::new(count, positions, doc.faces)
    }

    pub fn to_document(&self) -> MeshDocument {
        MeshDocument {
            vertices: self
                .positions
                .as_ref()
                .map(|ps| ps.iter().map(|p| [p.x, p.y, p.z]).collect()),
            vertex_count: Some(self.vertex_count),
            faces: self.faces.clone(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn positions(&self) -> Option<&[Vec3]> {
        self.positions.as_deref()
    }

    pub fn is_orientable(&self) -> bool {
        self.orientable
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 + self.faces.len() as i64 - self.edges.len() as i64
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }
}

fn cycle_pairs(face: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    face.iter()
        .zip(face.iter().cycle().skip(1))
        .map(|(&a, &b)| (a, b))
}

/// Checks that the faces around every vertex form one closed fan.
fn check_fans(
    faces: &[Vec<usize>],
    stars: &[Vec<usize>],
    edge_faces: &BTreeMap<(usize, usize), Vec<(usize, bool)>>,
) -> Result<()> {
    for (v, star) in stars.iter().enumerate() {
        // Two faces around v are neighbours when they share an edge at v.
        let mut seen = vec![star[0]];
        let mut stack = vec![star[0]];
        while let Some(f) = stack.pop() {
            let face = &faces[f];
            let i = face.iter().position(|&u| u == v).unwrap();
            let n = face.len();
            for u in [face[(i + 1) % n], face[(i + n - 1) % n]] {
                for &(g, _) in &edge_faces[&(u.min(v), u.max(v))] {
                    if !seen.contains(&g) {
                        seen.push(g);
                        stack.push(g);
                    }
                }
            }
        }
        if seen.len() != star.len() {
            return Err(Error::NonManifoldVertex(v));
        }
    }
    Ok(())
}

/// Tries to give every face an orientation so that each edge is traversed
/// once in each direction. Returns orientability and the number of connected
/// components.
fn orient(
    face_count: usize,
    edge_faces: &BTreeMap<(usize, usize), Vec<(usize, bool)>>,
) -> (bool, usize) {
    let mut adjacency: Vec<Vec<(usize, bool)>> = vec![Vec::new(); face_count];
    for incident in edge_faces.values() {
        let [(f, df), (g, dg)] = [incident[0], incident[1]];
        // Same stored direction means one of the two faces must be flipped.
        let flip = df == dg;
        adjacency[f].push((g, flip));
        adjacency[g].push((f, flip));
    }
    let mut flipped: Vec<Option<bool>> = vec![None; face_count];
    let mut orientable = true;
    let mut components = 0;
    for start in 0..face_count {
        if flipped[start].is_some() {
            continue;
        }
        components += 1;
        flipped[start] = Some(false);
        let mut stack = vec![start];
        while let Some(f) = stack.pop() {
            let ff = flipped[f].unwrap();
            for &(g, flip) in &adjacency[f] {
                let want = ff ^ flip;
                match flipped[g] {
                    None => {
                        flipped[g] = Some(want);
                        stack.push(g);
                    }
                    Some(have) if have != want => orientable = false,
                    Some(_) => {}
                }
            }
        }
    }
    (orientable, components)
}

/// Genus of a closed surface, when it is determined by `χ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Genus {
    Orientable(u32),
    /// Non-orientable or disconnected.
    Unknown,
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Genus::Orientable(g) => write!(f, "{g}"),
            Genus::Unknown => f.write_str("non-orientable/unknown"),
        }
    }
}

impl Serialize for Genus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Genus::Orientable(g) => s.serialize_u32(*g),
            Genus::Unknown => s.serialize_str("non-orientable/unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TopologyReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub chi: i64,
    pub genus: Genus,
    /// Number of faces with each polygon size.
    pub face_size_histogram: BTreeMap<usize, usize>,
}

pub fn euler_characteristic(m: &SurfaceMesh) -> TopologyReport {
    let chi = m.euler_characteristic();
    let genus = if m.orientable && m.components == 1 && chi <= 2 && chi % 2 == 0 {
        Genus::Orientable(((2 - chi) / 2) as u32)
    } else {
        Genus::Unknown
    };
    let mut face_size_histogram = BTreeMap::new();
    for face in &m.faces {
        *face_size_histogram.entry(face.len()).or_insert(0) += 1;
    }
    TopologyReport {
        vertices: m.vertex_count,
        edges: m.edges.len(),
        faces: m.faces.len(),
        chi,
        genus,
        face_size_histogram,
    }
}

/// `(Σ_f E_f, 2E)`: summing face sizes counts every edge once per side.
pub fn edge_double_count_check(m: &SurfaceMesh) -> (usize, usize) {
    let sum = m.faces.iter().map(Vec::len).sum();
    (sum, 2 * m.edges.len())
}

fn face_angles(m: &SurfaceMesh) -> Result<Vec<Vec<f64>>> {
    let positions = m.positions.as_ref().ok_or(Error::MissingPositions)?;
    m.faces
        .iter()
        .map(|face| {
            let n = face.len();
            (0..n)
                .map(|i| {
                    interior_angle(
                        positions[face[(i + n - 1) % n]],
                        positions[face[i]],
                        positions[face[(i + 1) % n]],
                    )
                })
                .collect()
        })
        .collect()
}

/// Total spherical excess, in degrees, of the faces of a mesh embedded on a
/// sphere with geodesic sides. A covering of the whole sphere totals 720°.
///
/// Faces must run counterclockwise seen from outside. Positions are taken as
/// directions from the centre, so the radius does not affect the result.
pub fn angle_sum_identity_check(m: &SurfaceMesh, _cfg: SphereConfig) -> Result<f64> {
    Ok(face_angles(m)?
        .iter()
        .map(|angles| angles.iter().sum::<f64>() - 180.0 * (angles.len() as f64 - 2.0))
        .sum())
}

/// Sum of the face angles meeting at each vertex; 360° everywhere for a
/// covering of the sphere.
pub fn vertex_angle_sum_check(m: &SurfaceMesh, _cfg: SphereConfig) -> Result<Vec<f64>> {
    let mut sums = vec![0.0; m.vertex_count];
    for (face, angles) in m.faces.iter().zip(face_angles(m)?) {
        for (&v, a) in face.iter().zip(angles) {
            sums[v] += a;
        }
    }
    Ok(sums)
}

pub fn load_mesh(json: &str) -> Result<SurfaceMesh> {
    SurfaceMesh::from_document(serde_json::from_str(json)?)
}
