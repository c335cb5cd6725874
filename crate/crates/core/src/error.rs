use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("product of +inf and -inf is undefined")]
    MixedInfinity,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("tropical vectors must have at least one coordinate")]
    EmptyVector,
    #[error("operation requires finite values")]
    NonFinite,
    #[error("graphs have different vertex counts: {left} vs {right}")]
    VertexCountMismatch { left: usize, right: usize },
    #[error("representation covers {rep} vertices but the graph has {graph}")]
    VertexMismatch { rep: usize, graph: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("bad caterpillar spec: {0}")]
    BadSpec(String),
    #[error("instance too large for exact search: {what} = {actual} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("graph is not a threshold graph")]
    NotThreshold,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid input representation: {0}")]
    InvalidInputRepresentation(String),
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
