//! Failures surfaced to the shell, each with its exit code.

use std::fmt;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_REGIME: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    /// Bad flag values that clap cannot catch on its own.
    Usage(String),
    /// Physically or numerically out-of-range parameters.
    Regime(String),
    Io(anyhow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Regime(_) => EXIT_REGIME,
            // I/O trouble is neither a usage nor a physics problem; report it
            // with the generic failure code.
            CliError::Io(_) => EXIT_VERIFY_FAILED,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Regime(m) => write!(f, "regime error: {m}"),
            CliError::Io(e) => write!(f, "{e:#}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<lambert_step::Error> for CliError {
    fn from(e: lambert_step::Error) -> Self {
        match e {
            lambert_step::Error::InvalidParameter(_) => CliError::Usage(e.to_string()),
            _ => CliError::Regime(e.to_string()),
        }
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Io(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
