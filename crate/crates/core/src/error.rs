use crate::universe::Key;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("universe bits must be in 1..=64, got {0}")]
    InvalidUniverse(u32),

    #[error("key {key} is outside a universe of {bits} bits")]
    KeyOutOfUniverse { key: Key, bits: u32 },

    #[error("keys must be strictly increasing (position {index}: {prev} then {next})")]
    NotStrictlyIncreasing { index: usize, prev: Key, next: Key },

    #[error("key set is empty")]
    EmptyKeySet,

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("key {0} not found")]
    NotFound(Key),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
