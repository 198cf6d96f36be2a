use std::fmt;

use crate::gamma::{Condition, Gamma3Violation};

/// Everything that can go wrong in this crate.
///
/// `Internal` is reserved for conditions the underlying mathematics
/// guarantees cannot occur; seeing one signals an implementation bug,
/// never bad input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Euclidean division or residue reduction by zero.
    DivisionByZero,
    /// `reduce_pair` called on the pair (0, 0).
    ZeroPair,
    /// An operation requiring determinant 1 received something else.
    NonUnimodular,
    /// A matrix required to lie in Gamma(3) does not.
    NotInGamma3(Gamma3Violation),
    /// An invariant tuple fails one or more of the conditions I1 - I4.
    InvalidTuple(Vec<Condition>),
    /// Text input did not match the element or matrix grammar.
    Parse(String),
    /// A guaranteed property failed to hold at runtime.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroPair => write!(f, "cannot reduce the pair (0, 0)"),
            Error::NonUnimodular => write!(f, "matrix determinant is not 1"),
            Error::NotInGamma3(v) => write!(f, "matrix is not in Gamma(3): {}", v),
            Error::InvalidTuple(conds) => {
                write!(f, "invariant tuple violates ")?;
                for (n, c) in conds.iter().enumerate() {
                    if n > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", c)?;
                }
                Ok(())
            }
            Error::Parse(msg) => write!(f, "parse error: {}", msg),
            Error::Internal(msg) => write!(f, "internal invariant violated: {}", msg),
        }
    }
}

impl std::error::Error for Error {}
