use conesemi_core::Error;
use thiserror::Error as ThisError;

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    Mismatch = 1,
    Resource = 2,
    Input = 3,
}

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Core(Error::CapExceeded { .. }) => ExitCode::Resource,
            CliError::Core(Error::InternalInconsistency(_)) => ExitCode::Mismatch,
            _ => ExitCode::Input,
        }
    }
}
