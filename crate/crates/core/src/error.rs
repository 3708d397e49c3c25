use alloc::string::String;
use core::fmt;

/// Errors raised by the core engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A vector of the proposed subspace is not in the ambient span.
    SubspaceNotContained {
        index: usize,
    },
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    GeneratorSetMismatch,
    NoPairing,
    BadParameters(String),
    CutoffRequired,
    CutoffExceeded {
        degree: i64,
        weight: u32,
    },
    FundamentalClassMissing,
    DimensionMismatch {
        left: usize,
        right: usize,
    },
    UnknownGenerator(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SubspaceNotContained { index } => {
                write!(f, "subspace not contained: vector {index} is outside the ambient span")
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::GeneratorSetMismatch => write!(f, "elements live over different generator sets"),
            Error::NoPairing => write!(f, "coalgebra has no cyclic pairing"),
            Error::BadParameters(msg) => write!(f, "bad parameters: {msg}"),
            Error::CutoffRequired => write!(f, "a weight cutoff is required"),
            Error::CutoffExceeded { degree, weight } => {
                write!(f, "block (degree {degree}, weight {weight}) exceeds the configured cutoff")
            }
            Error::FundamentalClassMissing => write!(f, "no fundamental class supplied"),
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::UnknownGenerator(id) => write!(f, "unknown generator `{id}`"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
