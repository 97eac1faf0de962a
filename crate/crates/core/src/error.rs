use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("input error: {0}")]
    Input(String),
    /// The Cartan datum is outside the supported (finite ADE) class.
    #[error("unsupported type: {0}")]
    UnsupportedType(String),
    #[error("domain error: {0}")]
    Domain(String),
    /// Idempotents of two factors do not match.
    #[error("composition error: {0}")]
    Composition(String),
    /// A computation refused to run because it exceeds a size bound.
    #[error("too large: {0}")]
    TooLarge(String),
    /// A truncated computation did not stabilize within its schedule.
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    /// An invariant of the implementation broke; never caused by valid input.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
