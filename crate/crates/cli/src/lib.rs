//! Front end for the Rindler entanglement simulator: negativity sweeps over
//! `(r, q_R, ordering)`, ordering classification at infinite acceleration,
//! single-point reports and the invariant check suite.

use std::path::PathBuf;

use thiserror::Error;

pub mod check;
pub mod config;
pub mod format;
pub mod orderings;
pub mod sampling;
pub mod single;
pub mod sweep;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] rindler_core::Error),

    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
            CliError::Core(e) if e.is_usage() => EXIT_USAGE,
            CliError::Core(_) | CliError::CheckFailed(_) => EXIT_CHECK_FAILED,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Writes `contents` to `path`, or to stdout when `path` is `None`.
pub fn emit(path: Option<&std::path::Path>, contents: &str) -> Result<()> {
    use std::io::Write;
    match path {
        Some(p) => std::fs::write(p, contents).map_err(|e| CliError::io(p, e)),
        None => std::io::stdout()
            .write_all(contents.as_bytes())
            .map_err(|e| CliError::io("<stdout>", e)),
    }
}
