use std::fmt;

/// Failure of one command, carrying the process exit code.
///
/// | code | meaning |
/// |------|---------|
/// | 1 | any other failure (point not in set, degenerate limit, ...) |
/// | 2 | invalid family, malformed rational or bad argument |
/// | 3 | requested depth over the enumeration cap |
/// | 4 | `--limit` on a family without a digit characterization |
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DEPTH_CAP: u8 = 3;
pub const EXIT_NO_DIGITS: u8 = 4;

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: message.into() }
    }

    pub fn failure(message: impl Into<String>) -> Self {
        CliError { code: EXIT_FAILURE, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<cantor_core::Error> for CliError {
    fn from(e: cantor_core::Error) -> Self {
        use cantor_core::Error as E;
        let code = match e {
            E::InvalidFamily(_)
            | E::ParseRational
            | E::OutsideUnitInterval
            | E::InvalidBase(_)
            | E::InvalidArgument(_) => EXIT_USAGE,
            E::DepthOverCap { .. } => EXIT_DEPTH_CAP,
            E::NoDigitCharacterization => EXIT_NO_DIGITS,
            _ => EXIT_FAILURE,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::usage(format!("bad JSON: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;
