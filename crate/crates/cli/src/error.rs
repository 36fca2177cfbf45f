use std::fmt;
use std::process::ExitCode;

/// Failures mapped to exit codes: 1 failed check, 2 usage, 3 computation.
#[derive(Debug)]
pub enum CliError {
    Failed(String),
    Usage(String),
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 3,
        })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Failed(m) => write!(f, "check failed: {m}"),
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Compute(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<bforms::Error> for CliError {
    fn from(e: bforms::Error) -> Self {
        use bforms::Error::*;
        match e {
            IdentityFailed(_) => CliError::Failed(e.to_string()),
            Parse(_) | UnknownVariable(_) | DuplicateVariable(_) | InvalidModulus(_) | ZeroPoint
            | DimensionMismatch(_) | InvalidPermutation(_) => CliError::Usage(e.to_string()),
            _ => CliError::Compute(e.to_string()),
        }
    }
}
