//! Command-line harness: configuration, check groups for every module,
//! report rendering and the acceptance suite.

pub mod asym;
pub mod calibration;
mod command;
pub mod config;
pub mod identities;
pub mod omega;
pub mod render;
pub mod repcount;
pub mod suite;
mod util;

pub use command::{run, run_to};
pub use config::{Config, Format, CACHE_ENV};

pub const TOOL: &str = "su3";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}
