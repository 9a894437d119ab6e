//! Local refinements that leave `χ` unchanged.

use super::{SurfaceMesh, VertexRule};
use crate::{Error, Result};

impl SurfaceMesh {
    /// Inserts a new vertex on edge `(a, b)`, growing both bordering faces by
    /// one corner: one new vertex, one new edge.
    ///
    /// The new vertex sits on just two faces, so the result may break the
    /// three-face rule that [`SurfaceMesh::new`] enforces.
    pub fn subdivide_edge(&self, a: usize, b: usize) -> Result<SurfaceMesh> {
        if !self.has_edge(a, b) {
            return Err(Error::InvalidRefinement(format!(
                "({a}, {b}) is not an edge"
            )));
        }
        let w = self.vertex_count;
        let faces = self
            .faces
            .iter()
            .map(|face| {
                let n = face.len();
                let mut out = Vec::with_capacity(n + 1);
                for i in 0..n {
                    let (u, v) = (face[i], face[(i + 1) % n]);
                    out.push(u);
                    if (u, v) == (a, b) || (u, v) == (b, a) {
                        out.push(w);
                    }
                }
                out
            })
            .collect();
        let positions = self.positions.as_ref().map(|ps| {
            let mut ps = ps.clone();
            let mid = ps[a] + ps[b];
            ps.push(mid.normalized().unwrap_or(mid));
            ps
        });
        SurfaceMesh::build(w + 1, positions, faces, VertexRule::AllowDegreeTwo)
    }

    /// Splits face `face` along a new edge between its corners `i` and `j`
    /// (positions within the face cycle): one new edge, one new face.
    pub fn split_face(&self, face: usize, i: usize, j: usize) -> Result<SurfaceMesh> {
        let cycle = self
            .faces
            .get(face)
            .ok_or_else(|| Error::InvalidRefinement(format!("no face {face}")))?;
        let n = cycle.len();
        let (i, j) = (i.min(j), i.max(j));
        if j >= n || j - i < 2 || (i == 0 && j == n - 1) {
            return Err(Error::InvalidRefinement(format!(
                "corners {i} and {j} of a {n}-gon are not separated by another corner"
            )));
        }
        let (u, v) = (cycle[i], cycle[j]);
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u, v));
        }
        let first: Vec<usize> = cycle[i..=j].to_vec();
        let second: Vec<usize> = cycle[j..].iter().chain(&cycle[..=i]).copied().collect();
        let mut faces = self.faces.clone();
        faces[face] = first;
        faces.push(second);
        SurfaceMesh::build(
            self.vertex_count,
            self.positions.clone(),
            faces,
            VertexRule::AllowDegreeTwo,
        )
    }
}

#[cfg(test)]
mod tests {
    use crate::mesh::{canonical_mesh, edge_double_count_check};
    use crate::Error;

    #[test]
    fn subdivide_then_split_keeps_chi() {
        let cube = canonical_mesh("cube").unwrap();
        let (a, b) = cube.edges()[0];
        let m = cube.subdivide_edge(a, b).unwrap();
        assert_eq!(m.vertex_count(), 9);
        assert_eq!(m.edge_count(), 13);
        assert_eq!(m.euler_characteristic(), 2);
        let f = m.faces().iter().position(|f| f.len() == 5).unwrap();
        let w = m.faces()[f].iter().position(|&v| v == 8).unwrap();
        let m = m.split_face(f, w, (w + 2) % 5).unwrap();
        assert_eq!(m.face_count(), 7);
        assert_eq!(m.euler_characteristic(), 2);
        let (sum, twice) = edge_double_count_check(&m);
        assert_eq!(sum, twice);
    }

    #[test]
    fn invalid_refinements() {
        let cube = canonical_mesh("cube").unwrap();
        assert!(matches!(
            cube.split_face(0, 0, 1),
            Err(Error::InvalidRefinement(_))
        ));
        assert!(matches!(
            cube.split_face(0, 0, 3),
            Err(Error::InvalidRefinement(_))
        ));
        assert!(cube.split_face(9, 0, 2).is_err());
        assert!(cube.subdivide_edge(0, 7).is_err());
    }
}
