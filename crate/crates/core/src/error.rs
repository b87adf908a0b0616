use alloc::string::String;
use core::fmt;

use crate::colour::Colour;

/// Errors raised by the core operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Both arguments of a difference function were the sentinel.
    SentinelPair,
    /// The sentinel was passed where a real colour is required.
    UnexpectedSentinel,
    /// `a0b0` was passed to a Capparelli-type difference function.
    ExcludedColour(Colour),
    /// A colour uses an index outside `0..n`.
    ColourOutOfRange { colour: Colour, n: usize },
    /// `n` is outside the supported range.
    InvalidN(usize),
    /// A sequence that should be reduced contains a removable pair at `index`, `index + 1`.
    NotReduced { index: usize },
    /// A counts vector does not match the number of insertion sites.
    LengthMismatch { expected: usize, actual: usize },
    /// Part sizes are not weakly decreasing, or a part is zero.
    NotAPartition { index: usize },
    /// A Frobenius row is not strictly decreasing, or the rows differ in length.
    NotAFrobeniusSymbol { index: usize },
    /// Input is not a member of the required family.
    NotMember(String),
    /// A delta/gamma table violates Condition 1 or 2.
    InvalidTable(String),
    /// A series has no reciprocal in the truncated ring.
    NotInvertible,
    /// `g(u, v, ..)` called with `u > v` or a wrong number of arguments.
    InvalidArgument(&'static str),
    /// Text could not be parsed.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SentinelPair => f.write_str("difference between two sentinels is undefined"),
            Error::UnexpectedSentinel => f.write_str("the sentinel colour is not allowed here"),
            Error::ExcludedColour(c) => write!(f, "colour {c} is not allowed here"),
            Error::ColourOutOfRange { colour, n } => {
                write!(f, "colour {colour} uses an index outside 0..{n}")
            }
            Error::InvalidN(n) => write!(f, "unsupported number of colours n = {n}"),
            Error::NotReduced { index } => {
                write!(f, "sequence is not reduced at positions {} and {}", index + 1, index + 2)
            }
            Error::LengthMismatch { expected, actual } => {
                write!(f, "expected {expected} insertion counts, got {actual}")
            }
            Error::NotAPartition { index } => {
                write!(f, "part {} breaks the weakly decreasing positive order", index + 1)
            }
            Error::NotAFrobeniusSymbol { index } => {
                write!(f, "Frobenius symbol is malformed at column {}", index + 1)
            }
            Error::NotMember(w) => write!(f, "not a member: {w}"),
            Error::InvalidTable(w) => write!(f, "invalid delta/gamma table: {w}"),
            Error::NotInvertible => f.write_str("series has a non-invertible constant term"),
            Error::InvalidArgument(w) => write!(f, "invalid argument: {w}"),
            Error::Parse(w) => write!(f, "parse error: {w}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
