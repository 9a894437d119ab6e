use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("latitude {0}° is outside [-90, 90]")]
    LatitudeOutOfRange(f64),
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("sphere radius must be positive, got {0}")]
    InvalidRadius(f64),
    #[error("degenerate direction: zero-length vector")]
    DegenerateDirection,
    #[error("not a triangle: sides {0}, {1}, {2}")]
    NotATriangle(f64, f64, f64),
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("degenerate side between vertices {0} and {1}: points coincide or are antipodal")]
    DegenerateSide(usize, usize),
    #[error("triangle comparison only: polygon has {0} vertices")]
    TriangleOnly(usize),
    #[error("interior angle {0}° is outside (0, 360)")]
    AngleOutOfRange(f64),

    #[error("mesh document: {0}")]
    MeshParse(#[from] serde_json::Error),
    #[error("face {face} has {len} vertices, at least 3 are required")]
    FaceTooSmall { face: usize, len: usize },
    #[error("face {face} repeats vertex {vertex}")]
    RepeatedVertex { face: usize, vertex: usize },
    #[error("face {face} references vertex {vertex}, but the mesh has {count} vertices")]
    VertexOutOfRange {
        face: usize,
        vertex: usize,
        count: usize,
    },
    #[error("vertex list has {positions} entries but vertex_count is {count}")]
    PositionCountMismatch { positions: usize, count: usize },
    #[error("edge ({0}, {1}) borders {2} faces, a closed surface needs exactly 2")]
    NonManifoldEdge(usize, usize, usize),
    #[error("vertex {vertex} belongs to {faces} faces, at least 3 are required")]
    LowVertexDegree { vertex: usize, faces: usize },
    #[error("faces around vertex {0} do not form a single fan")]
    NonManifoldVertex(usize),
    #[error("edge ({0}, {1}) already exists")]
    DuplicateEdge(usize, usize),
    #[error("invalid refinement: {0}")]
    InvalidRefinement(String),
    #[error("mesh has no vertex positions; angle checks need a spherical embedding")]
    MissingPositions,
    #[error("invalid mesh parameters: {0}")]
    MeshParameters(String),
    #[error("unknown mesh {0:?}")]
    UnknownMesh(String),
}
