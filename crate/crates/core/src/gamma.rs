//! The level-3 congruence subgroup and its orbit invariants.
//!
//! The module provides:
//!
//! - [`in_gamma3`] / [`in_gamma_inf3`]: membership in Gamma(3) (determinant 1
//!   and entrywise congruent to the identity mod 3) and in its
//!   upper-triangular unipotent subgroup;
//! - [`invariants`]: the six-component invariant of a Gamma(3) matrix — the
//!   bottom row of the matrix and the bottom row of its wedge-product matrix;
//! - [`InvariantTuple`] with [`InvariantTuple::check_conditions`] validating
//!   the four arithmetic conditions I1 - I4 the invariants always satisfy;
//! - [`same_orbit`]: orbit equality under left multiplication by the
//!   unipotent subgroup, computed by two independent routes (invariant
//!   comparison, and membership of `B * A^-1`) that are cross-checked.
//!
//! Tuples serialize as JSON arrays of six element strings in the order
//! `[A1, B1, C1, A2, B2, C2]`.

use std::fmt;

use crate::eisenstein::{gcd, EisensteinInt};
use crate::matrix::Mat3;
use crate::Error;

/// Labels for the four arithmetic conditions a valid invariant tuple
/// satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// A1, A2, B1, B2 all divisible by 3.
    I1,
    /// C1, C2 both congruent to 1 mod 3.
    I2,
    /// gcd(A1, B1, C1) = gcd(A2, B2, C2) = 1.
    I3,
    /// A1*C2 - B1*B2 + C1*A2 = 0.
    I4,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::I1 => "I1",
            Condition::I2 => "I2",
            Condition::I3 => "I3",
            Condition::I4 => "I4",
        };
        f.write_str(s)
    }
}

/// Why a matrix fails Gamma(3) membership: bad determinant, or the first
/// entry (row-major, 1-based) that is not congruent to the identity mod 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gamma3Violation {
    Determinant,
    Entry { row: usize, col: usize },
}

impl fmt::Display for Gamma3Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gamma3Violation::Determinant => write!(f, "determinant is not 1"),
            Gamma3Violation::Entry { row, col } => write!(
                f,
                "entry ({}, {}) is not congruent to the identity mod 3",
                row, col
            ),
        }
    }
}

/// First reason `m` is not in Gamma(3), or `None` for members.
pub fn gamma3_violation(m: &Mat3) -> Option<Gamma3Violation> {
    if !m.det().is_one() {
        return Some(Gamma3Violation::Determinant);
    }
    for i in 0..3 {
        for j in 0..3 {
            let expected = if i == j {
                EisensteinInt::one()
            } else {
                EisensteinInt::zero()
            };
            if !(m.entry(i, j) - &expected).mod3().is_zero() {
                return Some(Gamma3Violation::Entry {
                    row: i + 1,
                    col: j + 1,
                });
            }
        }
    }
    None
}

/// Determinant 1 and entrywise congruent to the identity mod 3.
pub fn in_gamma3(m: &Mat3) -> bool {
    gamma3_violation(m).is_none()
}

/// Member of Gamma(3) that is additionally upper-triangular unipotent.
pub fn in_gamma_inf3(m: &Mat3) -> bool {
    in_gamma3(m)
        && m.entry(1, 0).is_zero()
        && m.entry(2, 0).is_zero()
        && m.entry(2, 1).is_zero()
        && m.entry(0, 0).is_one()
        && m.entry(1, 1).is_one()
        && m.entry(2, 2).is_one()
}

/// The six-component orbit invariant (A1, B1, C1, A2, B2, C2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantTuple {
    a1: EisensteinInt,
    b1: EisensteinInt,
    c1: EisensteinInt,
    a2: EisensteinInt,
    b2: EisensteinInt,
    c2: EisensteinInt,
}

impl InvariantTuple {
    /// Assemble a tuple from raw components. Nothing is validated here; use
    /// [`InvariantTuple::check_conditions`].
    pub fn new(
        a1: EisensteinInt,
        b1: EisensteinInt,
        c1: EisensteinInt,
        a2: EisensteinInt,
        b2: EisensteinInt,
        c2: EisensteinInt,
    ) -> Self {
        InvariantTuple {
            a1,
            b1,
            c1,
            a2,
            b2,
            c2,
        }
    }

    pub fn a1(&self) -> &EisensteinInt {
        &self.a1
    }
    pub fn b1(&self) -> &EisensteinInt {
        &self.b1
    }
    pub fn c1(&self) -> &EisensteinInt {
        &self.c1
    }
    pub fn a2(&self) -> &EisensteinInt {
        &self.a2
    }
    pub fn b2(&self) -> &EisensteinInt {
        &self.b2
    }
    pub fn c2(&self) -> &EisensteinInt {
        &self.c2
    }

    /// Components in serialization order.
    pub fn elements(&self) -> [&EisensteinInt; 6] {
        [&self.a1, &self.b1, &self.c1, &self.a2, &self.b2, &self.c2]
    }

    /// The conditions this tuple violates, in label order; empty for valid
    /// tuples.
    pub fn check_conditions(&self) -> Vec<Condition> {
        let mut violated = Vec::new();
        let div3 = |x: &EisensteinInt| x.mod3().is_zero();
        if !(div3(&self.a1) && div3(&self.a2) && div3(&self.b1) && div3(&self.b2)) {
            violated.push(Condition::I1);
        }
        if !(self.c1.mod3().is_one() && self.c2.mod3().is_one()) {
            violated.push(Condition::I2);
        }
        let triple_gcd = |x: &EisensteinInt, y: &EisensteinInt, z: &EisensteinInt| {
            gcd(&gcd(x, y), z)
        };
        if !(triple_gcd(&self.a1, &self.b1, &self.c1).is_one()
            && triple_gcd(&self.a2, &self.b2, &self.c2).is_one())
        {
            violated.push(Condition::I3);
        }
        let laplace = &self.a1 * &self.c2 - &self.b1 * &self.b2 + &self.c1 * &self.a2;
        if !laplace.is_zero() {
            violated.push(Condition::I4);
        }
        violated
    }

    pub fn is_valid(&self) -> bool {
        self.check_conditions().is_empty()
    }
}

impl serde::Serialize for InvariantTuple {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.elements())
    }
}

impl<'de> serde::Deserialize<'de> for InvariantTuple {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let items = Vec::<EisensteinInt>::deserialize(deserializer)?;
        let [a1, b1, c1, a2, b2, c2]: [EisensteinInt; 6] = items
            .try_into()
            .map_err(|_| D::Error::custom("expected exactly 6 element strings"))?;
        Ok(InvariantTuple::new(a1, b1, c1, a2, b2, c2))
    }
}

/// The invariant of a Gamma(3) matrix: bottom row of `A`, then the bottom
/// row of the wedge-product matrix, computed directly from 2x2 minors.
pub fn invariants(m: &Mat3) -> Result<InvariantTuple, Error> {
    if let Some(violation) = gamma3_violation(m) {
        return Err(Error::NotInGamma3(violation));
    }
    let [_, [d, e, f], [g, h, i]] = m.rows();
    Ok(InvariantTuple::new(
        g.clone(),
        h.clone(),
        i.clone(),
        d * h - e * g,
        d * i - f * g,
        e * i - f * h,
    ))
}

/// Do `a` and `b` lie in the same left orbit under the unipotent subgroup?
///
/// Computed two independent ways — equality of invariant tuples, and
/// membership of `b * a^-1` in the unipotent subgroup — and cross-checked;
/// disagreement is reported as an internal error.
pub fn same_orbit(a: &Mat3, b: &Mat3) -> Result<bool, Error> {
    let inv_a = invariants(a)?;
    let inv_b = invariants(b)?;
    let by_invariants = inv_a == inv_b;
    let quotient = b * &a.inverse_unimodular()?;
    let by_quotient = in_gamma_inf3(&quotient);
    if by_invariants != by_quotient {
        return Err(Error::Internal("orbit-test routes disagree"));
    }
    Ok(by_invariants)
}
