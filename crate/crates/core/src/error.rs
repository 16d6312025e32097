use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Rejected precision or evaluation settings.
    #[error("configuration error: {0}")]
    Config(String),

    /// An argument falls outside the domain where the operation is defined.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("pole of zeta at s = 1")]
    Pole,

    #[error("argument {s} is within {radius} of the pole at s = 1; pass the near-pole flag to evaluate anyway")]
    NearPole { s: String, radius: f64 },

    #[error("pole collision: {0}")]
    PoleCollision(String),

    #[error("gamma function pole at non-positive integer {0}")]
    GammaPole(i64),

    /// The series or acceleration could not reach the requested accuracy.
    #[error("precision shortfall: {0}")]
    PrecisionShortfall(String),

    #[error("cache file {path}: line {line}: {message}")]
    CacheParse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("cache file {path}: unsupported header {found:?}, expected {expected:?}")]
    CacheVersion {
        path: PathBuf,
        found: String,
        expected: &'static str,
    },

    #[error("cache integrity check failed at B_{index}: {message}")]
    CacheIntegrity { index: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
