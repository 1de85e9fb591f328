//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Errors reported by `stabkit` operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands act on different qubit counts.
    WidthMismatch { expected: usize, found: usize },
    /// A qubit or column index is outside the operand's width.
    IndexOutOfRange { index: usize, limit: usize },
    /// A size limit was exceeded (qubit caps, enumeration guards).
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
    /// Malformed input: unknown names, bad characters, invalid partitions.
    Usage(String),
    /// An object violates the structural requirements of the operation.
    Structure(String),
    /// A generator set was required to be independent but is not.
    DependentRows,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::WidthMismatch { expected, found } => {
                write!(f, "width mismatch: expected {expected} qubits, found {found}")
            }
            Error::IndexOutOfRange { index, limit } => {
                write!(f, "index {index} out of range (limit {limit})")
            }
            Error::Capacity {
                what,
                requested,
                limit,
            } => write!(f, "{what} capacity exceeded: {requested} > {limit}"),
            Error::Usage(msg) => write!(f, "usage error: {msg}"),
            Error::Structure(msg) => write!(f, "structure error: {msg}"),
            Error::DependentRows => write!(f, "generator rows are not independent"),
        }
    }
}

impl core::error::Error for Error {}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }
}
