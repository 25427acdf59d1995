use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },

    #[error("zero input: {0}")]
    ZeroInput(&'static str),

    #[error("graph is not closed with respect to its labeling")]
    NotClosed,

    #[error("maximal cliques of this closed labeling are not intervals (components interleave)")]
    NonIntervalCliques,

    #[error("graph is not connected")]
    Disconnected,

    #[error("size limit exceeded for {what}: {got} > {max}")]
    SizeLimit {
        what: &'static str,
        max: usize,
        got: usize,
    },

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("Cohen-Macaulay certificate unavailable: {0}")]
    UncertifiedCm(String),

    #[error("internal cross-check failed: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
