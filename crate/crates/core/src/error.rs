use thiserror::Error;

use crate::check::CheckReport;

/// Errors raised across the toolkit.
///
/// Mathematical failures of a checker are *not* errors; they are reported
/// through [`CheckReport`]. Errors are reserved for malformed input, broken
/// preconditions and singular maps.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("twist not multiplicative for product `{product}` at ({}, {})", .pair.0 + 1, .pair.1 + 1)]
    NotMultiplicative { product: String, pair: (usize, usize) },

    #[error("wrong kind: expected {expected}, found {found}")]
    WrongKind { expected: String, found: String },

    #[error("precondition failed: {what}")]
    Precondition { what: String, report: Box<CheckReport> },

    #[error("twist does not commute: {0}")]
    NotIntertwining(String),

    #[error("degree inhomogeneous: {0}")]
    Inhomogeneous(String),

    #[error("ill-defined transport through operator: {0}")]
    IllDefinedTransport(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }

    pub(crate) fn precondition(what: impl Into<String>, report: CheckReport) -> Self {
        Error::Precondition { what: what.into(), report: Box::new(report) }
    }

    pub(crate) fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { context: context.into(), message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
