use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation (e.g. a ground
    /// set without 0 handed to a sequential check, or a set not contained in X).
    #[error("domain error: {0}")]
    Domain(String),

    /// A configured capacity guard was exceeded.
    #[error("capacity exceeded: {what} is {actual}, limit {limit}")]
    Capacity {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    /// A sum set does not fit the value bound chosen for its operands.
    #[error("representation bound {bound} too small for value {value}")]
    Representation { bound: u32, value: u64 },

    #[error("vertex {0} has no label")]
    IncompleteLabeling(usize),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
