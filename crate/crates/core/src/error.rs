use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A matrix or lattice is too small (or mismatched) for the operation.
    #[error("size error: {0}")]
    Size(String),

    /// An index lies outside the matrix.
    #[error("index ({i}, {j}) out of range for size {size}")]
    Range { i: usize, j: usize, size: usize },

    /// A square system turned out to be singular.
    #[error("singular system of order {order}: rank {rank}")]
    Singular { order: usize, rank: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An input violated the documented precondition of an operation.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal identity that must hold for valid inputs did not.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    /// Corner polynomial construction exhausted every candidate.
    #[error("construction failed: {0}")]
    Construction(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
