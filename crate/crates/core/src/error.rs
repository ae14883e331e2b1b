use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Type D data needs `m >= 2`.
    RankTooSmall { m: usize },
    RankMismatch { expected: usize, found: usize },
    /// A rational coordinate whose denominator does not divide 2.
    NotHalfInteger(String),
    /// A highest weight that fails its dominance condition.
    NotDominant { what: &'static str, coords: Vec<i64> },
    NegativeDegree(i64),
    CohomologyDegree { j: usize, max: usize },
    /// Full Weyl group enumeration is capped.
    EnumerationBound { m: usize, max: usize },
    InvalidSignedPermutation(String),
    InvalidArgument(String),
    /// The harmonic kernel dimension disagrees with the Weyl dimension.
    CertificationFailed {
        n: usize,
        degree: usize,
        kernel_dim: u64,
        weyl_dim: u64,
    },
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RankTooSmall { m } => write!(f, "rank parameter m = {m} must be at least 2"),
            Error::RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected {expected}, found {found}")
            }
            Error::NotHalfInteger(s) => write!(f, "coordinate {s} is not a half-integer"),
            Error::NotDominant { what, coords } => {
                write!(f, "{coords:?} is not dominant for {what}")
            }
            Error::NegativeDegree(d) => write!(f, "negative degree {d}"),
            Error::CohomologyDegree { j, max } => {
                write!(f, "cohomology degree {j} outside 0..={max}")
            }
            Error::EnumerationBound { m, max } => {
                write!(f, "m = {m} exceeds the enumeration bound {max}")
            }
            Error::InvalidSignedPermutation(s) => write!(f, "invalid signed permutation: {s}"),
            Error::InvalidArgument(s) => write!(f, "invalid argument: {s}"),
            Error::CertificationFailed {
                n,
                degree,
                kernel_dim,
                weyl_dim,
            } => write!(
                f,
                "certification failed for n = {n}, degree {degree}: kernel dimension {kernel_dim} != Weyl dimension {weyl_dim}"
            ),
            Error::Overflow => write!(f, "integer overflow"),
        }
    }
}

impl core::error::Error for Error {}
