use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A simple-reflection index outside `0..rank`.
    IndexOutOfRange { index: usize, rank: usize },
    UnknownType(String),
    /// A weight with the wrong number of coordinates, or a malformed G2 triple.
    InvalidWeight(String),
    GroupTooLarge { cap: usize },
    ParseElement(String),
    /// Precondition `w` is a minimal coset representative failed.
    NotMinimalCosetRep(String),
    /// A Hecke element outside `x_J H`, or not in the expected span.
    NotInSpan(String),
    NotInTransversal { i: usize, j: usize },
    /// A matrix that is not `H`-linear; carries the first violated relation.
    NotMember { i: usize, j: usize, k: usize },
    NoRegularOrbit,
    /// Runtime validation of a canonical basis element failed.
    CanonicalCheck(String),
    PositivityViolation(String),
    BadArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndexOutOfRange { index, rank } => {
                write!(f, "simple index {} out of range for rank {}", index + 1, rank)
            }
            Error::UnknownType(s) => write!(f, "unknown Cartan type `{}`", s),
            Error::InvalidWeight(s) => write!(f, "invalid shifted weight: {}", s),
            Error::GroupTooLarge { cap } => write!(f, "Weyl group exceeds the cap of {} elements", cap),
            Error::ParseElement(s) => write!(f, "cannot parse group element `{}`", s),
            Error::NotMinimalCosetRep(s) => write!(f, "not a minimal coset representative: {}", s),
            Error::NotInSpan(s) => write!(f, "element not in the expected span: {}", s),
            Error::NotInTransversal { i, j } => {
                write!(f, "pair ({}, {}) is not in the orbit transversal", i, j)
            }
            Error::NotMember { i, j, k } => write!(
                f,
                "matrix is not H-linear: coordinate relation fails at (i={}, j={}, k={})",
                i,
                j,
                k + 1
            ),
            Error::NoRegularOrbit => f.write_str(
                "weight set contains no regular orbit; duality verification requires one",
            ),
            Error::CanonicalCheck(s) => write!(f, "canonical basis check failed: {}", s),
            Error::PositivityViolation(s) => write!(f, "positivity violated: {}", s),
            Error::BadArgument(s) => write!(f, "{}", s),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
