use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// The input contains a forbidden pattern. `witness` lists host vertices
    /// in pattern-vertex order.
    #[error("input contains {pattern} at {witness:?}")]
    Contains { pattern: String, witness: Vec<usize> },

    #[error("{what}: size {got} exceeds limit {limit}")]
    SizeLimit {
        what: String,
        limit: usize,
        got: usize,
    },

    #[error("contract violated: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;
