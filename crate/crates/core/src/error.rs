use thiserror::Error;

/// Errors raised by the sequence generators and complexity measures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input too short: need {needed} terms, have {available}")]
    InputTooShort { needed: usize, available: usize },

    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("index {index} out of range for explicit sequence of length {len}")]
    OutOfRange { index: String, len: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// The requested computation would exceed its work cap. `partial` is the
    /// best value found before giving up.
    #[error("budget exceeded after {work} units of work (partial result {partial})")]
    BudgetExceeded { work: u64, partial: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
