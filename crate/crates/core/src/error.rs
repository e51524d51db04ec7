use std::fmt;

use crate::seeds::SeedKind;

/// Errors produced by this crate.
///
/// Width mismatches between operands are treated as caller bugs and panic
/// rather than returning a variant here, the same way out-of-bounds indexing
/// does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Requested bit width is outside `1..=Width::MAX_BITS`.
    InvalidWidth(u32),
    /// The value is even; no multiplicative inverse modulo 2^w exists.
    InverseDoesNotExist,
    /// A numeric string could not be parsed.
    InvalidNumber(String),
    /// A seed formula was applied below the minimum width it is valid for.
    SeedWidthTooSmall {
        kind: SeedKind,
        width: u32,
        min: u32,
    },
    /// Montgomery modulus must be odd and greater than 1.
    InvalidModulus,
    /// REDC input must have exactly twice the modulus width.
    RedcWidthMismatch { expected: u32, got: u32 },
    /// REDC input `t` must satisfy `t < n * 2^w`.
    RedcOperandTooLarge,
    /// Checked exact division found that the divisor does not divide the
    /// numerator as ordinary integers.
    InexactDivision,
    /// A dataflow program failed structural validation.
    InvalidProgram(&'static str),
    /// A cost-model description could not be parsed.
    InvalidCostModel(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidWidth(bits) => {
                write!(f, "width {bits} is outside the supported range 1..=4096")
            }
            Error::InverseDoesNotExist => {
                write!(f, "inverse does not exist for even a")
            }
            Error::InvalidNumber(s) => write!(f, "invalid number: {s}"),
            Error::SeedWidthTooSmall { kind, width, min } => write!(
                f,
                "seed formula {kind:?} requires width >= {min}, got {width}"
            ),
            Error::InvalidModulus => write!(f, "modulus must be odd and greater than 1"),
            Error::RedcWidthMismatch { expected, got } => write!(
                f,
                "REDC input must be {expected} bits (twice the modulus width), got {got}"
            ),
            Error::RedcOperandTooLarge => {
                write!(f, "REDC input exceeds n * 2^w")
            }
            Error::InexactDivision => {
                write!(f, "divisor does not exactly divide the numerator")
            }
            Error::InvalidProgram(msg) => write!(f, "invalid program: {msg}"),
            Error::InvalidCostModel(msg) => write!(f, "invalid cost model: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
