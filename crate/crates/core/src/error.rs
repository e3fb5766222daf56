use alloc::string::String;

/// Errors raised by constructors, searches and verifiers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("construction needs {needed} vertices, above the cap of {cap}")]
    VertexCap { needed: usize, cap: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    MultiEdge(usize, usize),
    #[error("vertex lists do not partition the vertex set: {0}")]
    NotPartition(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("vertex {0} has no copy of the book graph in its neighborhood")]
    EmptyNeighborhoodCopies(usize),
    #[error("no projection found after {retries} draws; last draw left {failing} vertices short")]
    RetriesExhausted { retries: usize, failing: usize },
    #[error("labeling is not a homomorphism: {0}")]
    InvalidLabeling(String),
}

pub type Result<T> = core::result::Result<T, Error>;
