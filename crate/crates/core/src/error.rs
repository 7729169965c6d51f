use thiserror::Error;

/// Errors returned by the oracles, estimators and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid function: {0}")]
    InvalidFunction(String),

    #[error("invalid set: {0}")]
    InvalidSet(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The requested operation has no exact implementation for this input.
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("base pair invalid: {0}")]
    InvalidBasePair(String),

    #[error("solution set is empty")]
    EmptySolutionSet,

    /// A sample violated an inequality that holds by construction.
    #[error("assertion failed at x = {x:?}: {what}")]
    Assertion { x: Vec<f64>, what: String },

    /// Bisection could not bracket a root; carries the last bracket tried.
    #[error("no sign change on [{lo}, {hi}] (residual bounds {at_lo:?} / {at_hi:?})")]
    NoSignChange {
        lo: f64,
        hi: f64,
        at_lo: (f64, f64),
        at_hi: (f64, f64),
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
