use thiserror::Error;

/// Errors raised by the simulator.
///
/// Everything except [`Error::Internal`] is a usage error: the caller handed
/// in something outside an operation's domain. `Internal` means a numerical
/// consistency check inside the library tripped.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mode index {index} out of range for {count} modes")]
    InvalidMode { index: usize, count: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("subsystem {index} out of range for {count} subsystems")]
    InvalidSubsystem { index: usize, count: usize },

    #[error("matrix is not hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
