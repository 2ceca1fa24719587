use std::path::PathBuf;

use fsp_core::io::IoError;
use fsp_core::FssError;
use thiserror::Error;

/// Exit codes, also listed in `fsp --help`.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_PARSE: i32 = 4;
pub const EXIT_UNKNOWN_ID: i32 = 5;
pub const EXIT_BIND: i32 = 6;
pub const EXIT_CONFIG: i32 = 7;

pub const EXIT_CODE_HELP: &str = "\
Exit codes:
  0  success
  1  E_INTERNAL  unexpected failure
  2  E_USAGE     bad command line
  3  E_IO        input could not be read or output written
  4  E_PARSE     malformed or invalid assessment document
  5  E_UNKNOWN   unknown alternative
  6  E_BIND      server could not bind its address
  7  E_CONFIG    invalid simulation configuration

Errors are printed to stderr as a single line: error[CODE]: message";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Read { path: PathBuf, source: std::io::Error },
    #[error("writing output: {0}")]
    Write(std::io::Error),
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: Box<IoError> },
    #[error("{0}")]
    Unknown(FssError),
    #[error("cannot bind {addr}: {source}")]
    Bind { addr: String, source: std::io::Error },
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Read { .. } | CliError::Write(_) => "E_IO",
            CliError::Parse { .. } => "E_PARSE",
            CliError::Unknown(_) => "E_UNKNOWN",
            CliError::Bind { .. } => "E_BIND",
            CliError::Config(_) => "E_CONFIG",
            CliError::Usage(_) => "E_USAGE",
            CliError::Internal(_) => "E_INTERNAL",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. } | CliError::Write(_) => EXIT_IO,
            CliError::Parse { .. } => EXIT_PARSE,
            CliError::Unknown(_) => EXIT_UNKNOWN_ID,
            CliError::Bind { .. } => EXIT_BIND,
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }

    /// `error[CODE]: message` on one line.
    pub fn render(&self) -> String {
        let message = self.to_string().replace(['\n', '\r'], " ");
        format!("error[{}]: {message}", self.code())
    }
}
