use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graphs are limited to 64 vertices, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("malformed graph6 string: {0}")]
    Graph6(String),
    #[error("sequence {0} is not graphic")]
    NotGraphic(String),
    #[error("cross-degree pair {0} is not graphic")]
    PairNotGraphic(String),
    #[error("invalid KS-partition: {0}")]
    InvalidPartition(String),
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("the empty graph has no decomposition")]
    EmptyGraph,
    #[error("{what} is limited to {limit}, got {got}")]
    CapacityExceeded { what: &'static str, limit: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
