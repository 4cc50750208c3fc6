use core::fmt;

/// Errors produced by partition construction and the hook/class-number
/// operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// A partition part was zero or negative.
    NonPositivePart,
    /// The partition does not have pairwise distinct odd parts.
    NotDistinctOdd,
    /// The partition is not equal to its conjugate.
    NotSelfConjugate,
    /// The requested (row, column) box lies outside the Young diagram.
    BoxOutOfDiagram,
    /// A t-core query was made with t = 0.
    InvalidModulus,
    /// A Hurwitz class number was requested at a nonnegative argument.
    NonNegativeArgument,
    /// A class-number combination that must be an integer was not.
    NonIntegralResult,
    /// An operation's stated precondition on its input was violated.
    PreconditionViolated,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositivePart => write!(f, "partition parts must be positive"),
            Error::NotDistinctOdd => write!(f, "parts must be distinct and odd"),
            Error::NotSelfConjugate => write!(f, "partition is not self-conjugate"),
            Error::BoxOutOfDiagram => write!(f, "box is outside the Young diagram"),
            Error::InvalidModulus => write!(f, "modulus t must be at least 1"),
            Error::NonNegativeArgument => write!(f, "argument must be negative"),
            Error::NonIntegralResult => write!(f, "class-number combination is not an integer"),
            Error::PreconditionViolated => write!(f, "precondition violated"),
        }
    }
}
