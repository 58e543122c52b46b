use thiserror::Error;

use crate::spectral::EigenResult;

/// Errors produced by graph construction, spectral computation,
/// enumeration and verification.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("invalid shift: target {target}: {reason}")]
    InvalidShift { target: usize, reason: String },

    #[error("partition is not equitable: vertices {u} and {v} in class {class} disagree ({detail})")]
    NotEquitable {
        u: usize,
        v: usize,
        class: usize,
        detail: String,
    },

    #[error("eigensolver did not converge within {iterations} iterations (best residual {residual:.3e})")]
    Convergence {
        iterations: usize,
        residual: f64,
        /// Best iterate reached before giving up.
        best: Box<EigenResult>,
    },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("no sign change found in ({lo}, {hi}]: no real root isolated")]
    NoRoot { lo: f64, hi: f64 },

    #[error("identification failed: {0}")]
    Identification(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
