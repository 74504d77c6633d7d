//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid parameters (loss/kernel families, tolerances, weights, ...).
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A point lies outside the domain an operation is defined on.
    #[error("domain violation: {0}")]
    Domain(String),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// (R2)/(R2') violation: a region or intersection piece carries no
    /// empirical mass.
    #[error("region {region} has zero empirical mass")]
    ZeroMassRegion { region: usize },

    /// The solver exhausted its iteration budget. Carries the best
    /// certificate residual reached and the number of sweeps performed.
    #[error("solver did not reach tolerance: residual {residual:.3e} after {sweeps} sweeps")]
    Solver { residual: f64, sweeps: usize },

    #[error("numeric failure: {0}")]
    Numeric(String),

    /// Wraps an error that occurred while handling one region of a
    /// localized model.
    #[error("region {region}: {source}")]
    InRegion {
        region: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn in_region(region: usize, source: Error) -> Self {
        Error::InRegion {
            region,
            source: Box::new(source),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
