use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("subset is over {subset} vertices but graph has {graph}")]
    SubsetMismatch { subset: usize, graph: usize },
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("subset must not contain every vertex")]
    FullSubset,
    #[error("{n} vertices exceeds the bitmask limit of {limit}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("graph is not cubic")]
    NotCubic,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid rational `{0}`")]
    InvalidRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
