use thiserror::Error;

/// Failures reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator set")]
    EmptyInput,
    #[error("exponent vector of length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("the ideal is not squarefree")]
    NotSquarefree,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("budget exhausted: {what} exceeded the limit {limit}")]
    Budget { what: &'static str, limit: u64 },
    #[error("degree cap {0} reached without a witness")]
    CapExceeded(u32),
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}

pub(crate) fn inconsistent<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Inconsistent(msg.into()))
}
