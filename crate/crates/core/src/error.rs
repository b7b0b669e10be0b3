use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("signal length {0} is not a power of two >= 2")]
    InvalidLength(usize),
    #[error("downsampling factor {d} does not divide length {n}")]
    BadFactor { n: usize, d: usize },
    #[error("index {index} out of range for length {len}")]
    OutOfRange { index: usize, len: usize },
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("duplicate spectrum index {0}")]
    DuplicateIndex(usize),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("malformed signal file: {0}")]
    Format(String),
    #[error("malformed spectrum json: {0}")]
    Json(String),
}
