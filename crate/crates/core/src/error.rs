//! Error type shared across the crate.

use std::fmt;

/// Errors produced by fallible operations.
///
/// `Inconsistency` is reserved for situations where two routes that must
/// agree (a closed formula and an independent computation) disagree; it
/// signals a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: empty moduli list, non-prime parameter, bad text payload.
    InvalidInput(String),
    /// Two values that must live over the same group (or ring) do not.
    Mismatch(String),
    /// A coordinate or component index is out of range.
    OutOfRange(String),
    /// The operation requires a finite group (or a finite search window) and got none.
    Unsupported(String),
    /// The map has infinite functional degree, so no polyfract represents it.
    NoRepresentation(String),
    /// Independent computations of the same quantity disagree.
    Inconsistency(String),
}

impl Error {
    /// True for errors that indicate a bug (formula vs. oracle disagreement)
    /// rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistency(_))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Mismatch(msg) => write!(f, "mismatch: {msg}"),
            Error::OutOfRange(msg) => write!(f, "index out of range: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::NoRepresentation(msg) => write!(f, "no representation: {msg}"),
            Error::Inconsistency(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
