use thiserror::Error;

/// Errors raised by the norm toolkit.
///
/// Each variant maps onto one process exit status of the command-line
/// front end (see [`Error::exit_code`]).
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed or non-finite input data.
    #[error("invalid input: {0}")]
    Input(String),
    /// A document failed to parse; the message carries the position.
    #[error("parse error: {0}")]
    Parse(String),
    /// An interval or point lies outside the function's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A numeric parameter is outside its admissible range.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// A documented precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An iterative method failed to converge.
    #[error("numerical error: {0}")]
    Numerical(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Parse(_) => 2,
            Error::Domain(_) | Error::Parameter(_) | Error::Precondition(_) => 3,
            Error::Numerical(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
