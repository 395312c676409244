//! File formats, parallel drivers and the command-line front end for
//! [`conesemi_core`].

pub mod cli;
pub mod document;
pub mod dot;
mod error;
pub mod parallel;
pub mod parse;
pub mod report;

pub use error::{CliError, ExitCode};

/// Environment variable bounding `|I_C(k)|` for the oracle.
pub const MAX_INTERVAL_ENV: &str = "CONESEMI_MAX_INTERVAL";

/// The oracle cap from the environment, falling back to the default.
pub fn interval_cap() -> Result<usize, CliError> {
    match std::env::var(MAX_INTERVAL_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("{MAX_INTERVAL_ENV} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(conesemi_core::oracle::DEFAULT_CAP),
    }
}
