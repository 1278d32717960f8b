use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertices are not connected")]
    Unreachable,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("infeasible: {what} needs {needed} elements, budget is {budget}")]
    Infeasible { what: String, needed: String, budget: u64 },

    #[error("out of scope: {0}")]
    OutOfScope(String),

    #[error("inconsistent observations: no vertex lies within radius {radius} of all of them")]
    Inconsistent { radius: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn infeasible(what: impl Into<String>, needed: impl ToString, budget: u64) -> Self {
        Error::Infeasible {
            what: what.into(),
            needed: needed.to_string(),
            budget,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
