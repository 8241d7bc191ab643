use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge ({u}, {v}): self-loops are not allowed")]
    InvalidEdge { u: usize, v: usize },
    #[error("node id {node} out of range for graph of order {n}")]
    InvalidNode { node: usize, n: usize },
    #[error("graphs must have at least one node")]
    EmptyGraph,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("{what} exceeded limit of {limit}")]
    LimitExceeded { what: &'static str, limit: usize },
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("invalid burning sequence: {0}")]
    InvalidSequence(String),
    #[error("invalid rooted tree partition: {0}")]
    InvalidPartition(String),
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("internal invariant breached: {0}")]
    InternalInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
