use core::fmt;

/// Errors surfaced by the library.
///
/// Every variant corresponds to a violated precondition of a specific
/// operation; none of them is recoverable-by-retry, so callers usually just
/// propagate them up to the report layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A principal block was requested from a bi-infinite matrix that has no
    /// declared origin (a generator view), so "rows 0..N" is meaningless.
    Unanchored,
    /// A window or block touches indices below row 0 of a semi-infinite
    /// matrix.
    WindowUnderflow,
    /// An entry was requested outside the stored window of a window-backed
    /// matrix.
    OutsideWindow,
    /// The operation requires a self-adjoint symbol (`ŝ_k = ŝ_{−k}`).
    NotSelfAdjoint,
    /// A triangular factorization hit a non-positive pivot: the symbol is not
    /// positive on the circle.
    NonPositivePivot,
    /// The discretized measure lost positivity: indefinite data or requested
    /// degree too high for the node count.
    IndefiniteMeasure,
    /// The identity only holds for zero-sum input vectors.
    ZeroSumRequired,
    /// Probability masses must sum to exactly 1.
    ProbabilityNotOne,
    /// The polynomial degree exceeds the order of the finite difference.
    DegreeExceedsOrder,
    /// A path/cumulant order outside the supported range (`n ≥ 2` for path
    /// sums, small enough to enumerate).
    OrderOutOfRange,
    /// Fewer than two samples: no empirical cumulants.
    TooFewSamples,
    /// Malformed argument with a human-readable reason.
    Invalid(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Unanchored => write!(f, "unanchored: bi-infinite matrix has no declared origin"),
            Error::WindowUnderflow => write!(f, "window extends below row 0 of a semi-infinite matrix"),
            Error::OutsideWindow => write!(f, "entry requested outside the stored window"),
            Error::NotSelfAdjoint => write!(f, "operation requires a self-adjoint symbol"),
            Error::NonPositivePivot => write!(f, "symbol not positive: factorization pivot is non-positive"),
            Error::IndefiniteMeasure => write!(f, "indefinite measure or degree too high"),
            Error::ZeroSumRequired => write!(f, "zero-sum required"),
            Error::ProbabilityNotOne => write!(f, "probabilities must sum to 1"),
            Error::DegreeExceedsOrder => write!(f, "degree exceeds order"),
            Error::OrderOutOfRange => write!(f, "order out of supported range"),
            Error::TooFewSamples => write!(f, "need at least two samples"),
            Error::Invalid(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
