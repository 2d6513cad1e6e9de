use thiserror::Error;

use crate::field::Field;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("determinant {0} is not a unit of k[t, t^-1]")]
    NotAUnit(String),

    #[error("not a vector bundle: {0}")]
    NotABundle(String),

    #[error("internal search failure: {0}")]
    InternalSearchFailure(String),

    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("invalid cocharacter: {0}")]
    InvalidCocharacter(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// The variant name, used as the `kind` of JSON diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch { .. } => "FieldMismatch",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotAUnit(_) => "NotAUnit",
            Error::NotABundle(_) => "NotABundle",
            Error::InternalSearchFailure(_) => "InternalSearchFailure",
            Error::UnsupportedGroup(_) => "UnsupportedGroup",
            Error::InvalidCocharacter(_) => "InvalidCocharacter",
            Error::InvalidField(_) => "InvalidField",
            Error::Parse(_) => "ParseError",
        }
    }
}
