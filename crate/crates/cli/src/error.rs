use std::fmt;

use recon_core::Error;

/// Why a command could not produce a result.
#[derive(Debug)]
pub enum Failure {
    Core(Error),
    BadInput(String),
    Io(std::io::Error),
}

impl Failure {
    /// 2 for exhausted budgets, 3 for bad input, 1 for anything that
    /// indicates a wrong result.
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::Infeasible { .. }) => 2,
            Failure::Core(Error::Internal(_)) => 1,
            Failure::Core(_) | Failure::BadInput(_) | Failure::Io(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::BadInput(m) => write!(f, "{m}"),
            Failure::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}
