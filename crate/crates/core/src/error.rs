//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("label must be -1 or 1 (line {line})")]
    BadCsvLabel { line: usize },

    #[error("row has {got} features, expected {expected} (line {line})")]
    BadCsvWidth {
        line: usize,
        expected: usize,
        got: usize,
    },

    #[error("cannot parse number {text:?} (line {line})")]
    BadCsvNumber { line: usize, text: String },

    #[error("label must be -1 or 1 (index {0})")]
    BadLabel(usize),

    #[error("training data contains a single class; the equality constraint admits only a degenerate rule")]
    OneClass,

    #[error("unknown model format_version {0} (expected 1)")]
    UnknownFormatVersion(i64),

    #[error("malformed model file: {0}")]
    MalformedModel(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
