use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("insufficient truncation: need dimension {needed}, have {available}")]
    InsufficientTruncation { needed: usize, available: usize },

    #[error("attaching map does not commute with faces: {0}")]
    FaceMismatch(String),

    #[error("step {step} invalid: {reason}")]
    InvalidStep { step: usize, reason: String },

    #[error("coverage incomplete: {0}")]
    Coverage(String),

    #[error("timeout after {elapsed_ms} ms: {trace}")]
    Timeout { elapsed_ms: u128, trace: String },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("algebra invariant violated: {0}")]
    Invariant(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: i32, found: i32 },

    #[error("not a point of the nerve: {0}")]
    NotAPoint(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Malformed(e.to_string())
    }
}
