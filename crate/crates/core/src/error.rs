use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("complex has no simplices")]
    EmptyComplex,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("simplex {0} is not a member of the complex")]
    NotMember(String),

    #[error("denominator is zero: {0}")]
    UndefinedDenominator(String),

    #[error("result is undefined: {0}")]
    UndefinedResult(String),

    #[error("complex has {actual} vertices, oracle limit is {limit}")]
    GuardExceeded { limit: usize, actual: usize },
}

impl Error {
    /// Short machine-readable kind, used by the CLI error envelope.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyComplex => "empty_complex",
            Error::Parse { .. } => "parse",
            Error::Argument(_) => "argument",
            Error::NotMember(_) => "membership",
            Error::UndefinedDenominator(_) => "undefined_denominator",
            Error::UndefinedResult(_) => "undefined_result",
            Error::GuardExceeded { .. } => "guard",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}
