use std::io;
use std::path::PathBuf;

use dicke_squeeze::{ConfigError, SqueezeError};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_UNDEFINED: i32 = 3;
/// `verify` ran to completion but at least one suite failed.
pub const EXIT_VERIFY_FAILED: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Validation(String),
    #[error(transparent)]
    Squeeze(#[from] SqueezeError),
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("cannot read config {}: {source}", path.display())]
    ReadConfig { path: PathBuf, source: io::Error },
    #[error("verification failed: {}", suites.join(", "))]
    VerifyFailed { suites: Vec<String> },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::ReadConfig { .. } => EXIT_USAGE,
            CliError::Validation(_) | CliError::Write { .. } => EXIT_VALIDATION,
            CliError::Squeeze(SqueezeError::UndefinedMeanSpin) => EXIT_UNDEFINED,
            CliError::Squeeze(_) => EXIT_VALIDATION,
            CliError::VerifyFailed { .. } => EXIT_VERIFY_FAILED,
        }
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Squeeze(e.into())
    }
}
