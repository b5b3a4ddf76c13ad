use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("order {0} outside supported range")]
    OrderOutOfRange(usize),

    #[error("{0:?} is not an edge")]
    NotAnEdge((usize, usize)),

    #[error("({0}, {1}, {2}) is not a face")]
    NotAFace(usize, usize, usize),

    #[error("invalid expansion: {0}")]
    InvalidMove(String),

    #[error("empty vertex set has no defined connectivity")]
    EmptySet,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("planar_code: {0}")]
    PlanarCode(String),

    #[error("no qualifying base graph: {0}")]
    NoQualifyingBase(String),

    #[error("family check failed: {0}")]
    FamilyCheck(String),

    #[error("predicate needs {0}, which was not computed")]
    UncomputedField(&'static str),

    #[error("i/o: {0}")]
    Io(String),

    #[error("format: {0}")]
    Format(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Format(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
