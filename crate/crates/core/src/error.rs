use thiserror::Error;

/// Errors surfaced by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VcError {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex id {id} out of range for n = {n} (line {line})")]
    Range { line: usize, id: usize, n: usize },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("linear system stayed singular after {0} resamples")]
    Singular(usize),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, VcError>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(VcError::Usage(msg.into()))
}
