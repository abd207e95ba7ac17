use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("polynomial parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid chart: {0}")]
    InvalidChart(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("non-finite integrand value {value} at node {node:?}")]
    NonFinite { node: Vec<f64>, value: f64 },

    #[error("non-finite Gram entry for monomial pair ({row}, {col})")]
    NonFiniteGram { row: String, col: String },

    #[error("volume growth needs exponent {slope:.3} > {limit:.3} on the sampled range")]
    GrowthTooFast { slope: f64, limit: f64 },

    #[error("growth estimate missing")]
    MissingGrowth,

    #[error("variety spec {path}: {msg}")]
    Spec { path: PathBuf, msg: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Configuration and I/O problems, as opposed to numerical failures.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            Error::Io { .. } | Error::Spec { .. } | Error::Parse { .. } | Error::InvalidArgument(_)
        )
    }
}
