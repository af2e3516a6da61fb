//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by the simulation toolkit.
///
/// The three variants map onto the CLI exit codes: `InvalidInput` and
/// `Config` are configuration problems (exit 2), `Estimation` is a
/// numerical failure of the least-squares canceller (exit 3).
#[derive(Debug, Error)]
pub enum Error {
    /// An operation was called with arguments violating its contract.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A requested configuration is internally inconsistent or infeasible.
    #[error("configuration error: {0}")]
    Config(String),

    /// The least-squares estimator hit a numerically rank-deficient basis.
    #[error("estimation error: regression matrix condition estimate {cond:.3e} exceeds {limit:.1e}")]
    Estimation { cond: f64, limit: f64 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
