use lieball_core::Error as CoreError;
use thiserror::Error;

/// Exit statuses of the `lieball` binary.
pub mod exit {
    pub const PASS: u8 = 0;
    pub const VERIFICATION_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const CERTIFICATION_FAILED: u8 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("malformed input: {0}")]
    Format(String),

    #[error("thread pool: {0}")]
    Threads(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(CoreError::CertificationFailed { .. }) => exit::CERTIFICATION_FAILED,
            CliError::Io(_) | CliError::Threads(_) => exit::VERIFICATION_FAILED,
            _ => exit::USAGE,
        }
    }
}
