//! Constructing a group element realizing a prescribed invariant tuple.
//!
//! [`case_of`] validates a candidate tuple and sorts it into one of five
//! construction cases according to which of `A1`, `B1`, `A2` vanish.
//! [`representative`] then builds a matrix in the congruence group whose
//! invariant tuple is exactly the input, together with its canonical left
//! decomposition. In cases 1-4 the matrix is assembled directly from
//! Steinberg factors determined by the tuple and its congruence factor is
//! the identity; in case 5 the tuple forces a block form `phi1(x)` and the
//! decomposition is computed by the general algorithm.

use std::fmt;

use crate::decompose::{decompose_left, CellTag, DiagonalUnit, LeftDecomposition, UnipotentMod3};
use crate::eisenstein::{extended_gcd, gcd, EisensteinInt};
use crate::gamma::{in_gamma3, invariants, InvariantTuple};
use crate::matrix::{phi1, phi2, Mat2, Mat3};
use crate::steinberg::{exact_div, YMatrix};
use crate::Error;

/// Which construction applies to a valid invariant tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    /// `A1 != 0` and `A2 != 0`.
    Case1,
    /// `A1 != 0` and `A2 = 0`.
    Case2,
    /// `A1 = 0`, `B1 != 0`, `A2 != 0`.
    Case3,
    /// `A1 = 0`, `B1 != 0`, `A2 = 0`.
    Case4,
    /// `A1 = B1 = 0` (which forces `C1 = 1` and `A2 = 0`).
    Case5,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::Case1 => "Case1",
            CaseTag::Case2 => "Case2",
            CaseTag::Case3 => "Case3",
            CaseTag::Case4 => "Case4",
            CaseTag::Case5 => "Case5",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl serde::Serialize for CaseTag {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// A matrix realizing a tuple, the case that produced it, and its left
/// decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representative {
    pub matrix: Mat3,
    pub case: CaseTag,
    pub decomposition: LeftDecomposition,
}

impl serde::Serialize for Representative {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("X", &self.matrix)?;
        map.serialize_entry("case", &self.case)?;
        map.serialize_entry("decomposition", &self.decomposition)?;
        map.end()
    }
}

/// Validate a tuple and classify it. Tuples violating any of the four
/// membership conditions are rejected with the list of failures.
pub fn case_of(t: &InvariantTuple) -> Result<CaseTag, Error> {
    let violated = t.check_conditions();
    if !violated.is_empty() {
        return Err(Error::InvalidTuple(violated));
    }
    Ok(if !t.a1().is_zero() {
        if !t.a2().is_zero() {
            CaseTag::Case1
        } else {
            CaseTag::Case2
        }
    } else if !t.b1().is_zero() {
        if !t.a2().is_zero() {
            CaseTag::Case3
        } else {
            CaseTag::Case4
        }
    } else {
        CaseTag::Case5
    })
}

/// Build a member of the congruence group whose invariant tuple is `t`.
pub fn representative(t: &InvariantTuple) -> Result<Representative, Error> {
    let case = case_of(t)?;
    let rep = match case {
        CaseTag::Case1 => case1(t)?,
        CaseTag::Case2 => case2(t)?,
        CaseTag::Case3 => case3(t)?,
        CaseTag::Case4 => case4(t)?,
        CaseTag::Case5 => case5(t)?,
    };

    if !in_gamma3(&rep.matrix) {
        return Err(Error::Internal("representative left the congruence group"));
    }
    if invariants(&rep.matrix)? != *t {
        return Err(Error::Internal("representative does not realize its tuple"));
    }
    if rep.decomposition.recompose() != rep.matrix {
        return Err(Error::Internal("representative decomposition does not recompose"));
    }
    if !rep.decomposition.shape_matches_cell() {
        return Err(Error::Internal("representative factor shape inconsistent with cell"));
    }
    Ok(rep)
}

/// Build the canonical transversal member with prescribed bottom row
/// `(r, s)`: Bezout solve, then reduce the top-left entry into the residue
/// transversal mod `r`. A zero `r` yields the identity (degenerate slot).
fn y_from_row(r: &EisensteinInt, s: &EisensteinInt) -> Result<YMatrix, Error> {
    if r.is_zero() {
        return Ok(YMatrix::identity());
    }
    let (g, x, y) = extended_gcd(s, r);
    if !g.is_one() {
        return Err(Error::Internal("transversal row entries are not coprime"));
    }
    let p0 = x;
    let q0 = -y;
    let (v, p) = p0.divmod(r)?;
    let q = &q0 - &(&v * s);
    YMatrix::try_from_mat(Mat2::new([[p, q], [r.clone(), s.clone()]]))
}

/// Shared tail of cases 1-4: form `W = d * phi1(y3) * phi2(y2) * phi1(y1)`,
/// reduce its inverse mod 3 to an upper unipotent `V`, and return
/// `X = V * W` with its left decomposition (congruence factor the identity).
fn assemble(
    case: CaseTag,
    d: DiagonalUnit,
    y3: YMatrix,
    y2: YMatrix,
    y1: YMatrix,
) -> Result<Representative, Error> {
    let w = &(&d.to_mat3() * &phi1(y3.matrix())) * &(&phi2(y2.matrix()) * &phi1(y1.matrix()));
    let w_inv = w
        .inverse_unimodular()
        .map_err(|_| Error::Internal("assembled factor product is not unimodular"))?;
    let reduced: Vec<EisensteinInt> = w_inv
        .rows()
        .iter()
        .flatten()
        .map(|entry| entry.mod3())
        .collect();
    for (idx, want_one) in [(0, true), (3, false), (4, true), (6, false), (7, false), (8, true)] {
        let ok = if want_one {
            reduced[idx].is_one()
        } else {
            reduced[idx].is_zero()
        };
        if !ok {
            return Err(Error::Internal("factor product inverse is not unipotent mod 3"));
        }
    }
    let v = UnipotentMod3::try_new(reduced[1].clone(), reduced[2].clone(), reduced[5].clone())?;
    let x = &v.to_mat3() * &w;

    let cell = match case {
        CaseTag::Case1 | CaseTag::Case3 => CellTag::Delta11,
        CaseTag::Case2 | CaseTag::Case4 => CellTag::Delta10,
        CaseTag::Case5 => CellTag::Delta2,
    };
    let decomposition = LeftDecomposition {
        c: Mat3::identity(),
        u: v,
        d,
        y3,
        y2,
        y1,
        cell,
    };
    Ok(Representative {
        matrix: x,
        case,
        decomposition,
    })
}

/// `A1 != 0`, `A2 != 0`: all three transversal slots are active.
fn case1(t: &InvariantTuple) -> Result<Representative, Error> {
    let g0 = gcd(t.a1(), t.b1());
    let t1 = exact_div(t.a1(), &g0).ok_or(Error::Internal("gcd does not divide A1"))?;
    let form1 = t1.unit_normalize();
    let r1 = form1.normal; // nonzero since A1 != 0
    let big_g = &g0 * &form1.unit; // A1 = G * r1
    let s1 = exact_div(t.b1(), &big_g).ok_or(Error::Internal("gcd does not divide B1"))?;
    let y1 = y_from_row(&r1, &s1)?;
    let p1 = y1.matrix().entry(0, 0).clone();
    let q1 = y1.matrix().entry(0, 1).clone();

    let form2 = big_g.unit_normalize();
    let alpha = form2.unit;
    let r2 = form2.normal;
    let alpha_inv = alpha.unit_inverse().ok_or(Error::Internal("unit has no inverse"))?;
    let s2 = &alpha_inv * t.c1();
    let y2 = y_from_row(&r2, &s2)?;

    let t3 = exact_div(t.a2(), &big_g)
        .ok_or(Error::Internal("first-row gcd does not divide A2"))?;
    let form3 = t3.unit_normalize();
    let beta = form3.unit;
    let r3 = form3.normal; // nonzero since A2 != 0
    let gamma = (&alpha * &beta)
        .unit_inverse()
        .ok_or(Error::Internal("unit has no inverse"))?;
    let s3 = &gamma * &(&(&p1 * t.c2()) - &(&q1 * t.b2()));
    let y3 = y_from_row(&r3, &s3)?;

    let d = DiagonalUnit::try_new(gamma, beta, alpha)?;
    assemble(CaseTag::Case1, d, y3, y2, y1)
}

/// `A1 != 0`, `A2 = 0`: the `y3` slot degenerates; the third diagonal unit
/// comes from the (necessarily unit) expression `p1*C2 - q1*B2`.
fn case2(t: &InvariantTuple) -> Result<Representative, Error> {
    let g0 = gcd(t.a1(), t.b1());
    let t1 = exact_div(t.a1(), &g0).ok_or(Error::Internal("gcd does not divide A1"))?;
    let form1 = t1.unit_normalize();
    let r1 = form1.normal;
    let big_g = &g0 * &form1.unit;
    let s1 = exact_div(t.b1(), &big_g).ok_or(Error::Internal("gcd does not divide B1"))?;
    let y1 = y_from_row(&r1, &s1)?;
    let p1 = y1.matrix().entry(0, 0).clone();
    let q1 = y1.matrix().entry(0, 1).clone();

    let form2 = big_g.unit_normalize();
    let alpha = form2.unit;
    let r2 = form2.normal;
    let alpha_inv = alpha.unit_inverse().ok_or(Error::Internal("unit has no inverse"))?;
    let s2 = &alpha_inv * t.c1();
    let y2 = y_from_row(&r2, &s2)?;

    let expr = &(&p1 * t.c2()) - &(&q1 * t.b2());
    if !expr.is_unit() {
        return Err(Error::Internal("degenerate-slot expression is not a unit"));
    }
    let beta = &alpha_inv * &expr;
    let gamma = (&alpha * &beta)
        .unit_inverse()
        .ok_or(Error::Internal("unit has no inverse"))?;
    let y3 = YMatrix::identity();

    let d = DiagonalUnit::try_new(gamma, beta, alpha)?;
    assemble(CaseTag::Case2, d, y3, y2, y1)
}

/// `A1 = 0`, `B1 != 0`, `A2 != 0`: the `y1` slot degenerates.
fn case3(t: &InvariantTuple) -> Result<Representative, Error> {
    let y1 = YMatrix::identity();

    let form2 = t.b1().unit_normalize();
    let alpha = form2.unit;
    let r2 = form2.normal;
    let alpha_inv = alpha.unit_inverse().ok_or(Error::Internal("unit has no inverse"))?;
    let s2 = &alpha_inv * t.c1();
    let y2 = y_from_row(&r2, &s2)?;

    let t3 = exact_div(t.a2(), t.b1()).ok_or(Error::Internal("B1 does not divide A2"))?;
    let form3 = t3.unit_normalize();
    let beta = form3.unit;
    let r3 = form3.normal;
    let gamma = (&alpha * &beta)
        .unit_inverse()
        .ok_or(Error::Internal("unit has no inverse"))?;
    let s3 = &gamma * t.c2();
    let y3 = y_from_row(&r3, &s3)?;

    let d = DiagonalUnit::try_new(gamma, beta, alpha)?;
    assemble(CaseTag::Case3, d, y3, y2, y1)
}

/// `A1 = 0`, `B1 != 0`, `A2 = 0`: only the `y2` slot is active.
fn case4(t: &InvariantTuple) -> Result<Representative, Error> {
    let y1 = YMatrix::identity();
    let y3 = YMatrix::identity();

    let form2 = t.b1().unit_normalize();
    let alpha = form2.unit;
    let r2 = form2.normal;
    let beta = alpha.unit_inverse().ok_or(Error::Internal("unit has no inverse"))?;
    let gamma = EisensteinInt::one();
    let s2 = &beta * t.c1();
    let y2 = y_from_row(&r2, &s2)?;

    let d = DiagonalUnit::try_new(gamma, beta, alpha)?;
    assemble(CaseTag::Case4, d, y3, y2, y1)
}

/// `A1 = B1 = 0`: the tuple is `(0, 0, 1, 0, B2, C2)` with `B2`, `C2`
/// coprime, realized by a block embedding of a 2x2 matrix with bottom row
/// `(B2, C2)`; its decomposition comes from the general algorithm.
fn case5(t: &InvariantTuple) -> Result<Representative, Error> {
    if !t.c1().is_one() {
        return Err(Error::Internal("degenerate tuple must have C1 = 1"));
    }
    let (g, a, b) = extended_gcd(t.c2(), &-t.b2());
    if !g.is_one() {
        return Err(Error::Internal("B2 and C2 are not coprime"));
    }
    // Shift the Bezout row by a multiple of (B2, C2) to meet the congruence
    // conditions: a - b*B2 = 1 and b*(1 - C2) = 0 mod 3.
    let af = &a - &(&b * t.b2());
    let bf = &b - &(&b * t.c2());
    let block = Mat2::new([[af, bf], [t.b2().clone(), t.c2().clone()]]);
    if !block.det().is_one() {
        return Err(Error::Internal("block construction lost unimodularity"));
    }
    let x = phi1(&block);
    let decomposition = decompose_left(&x)?;
    Ok(Representative {
        matrix: x,
        case: CaseTag::Case5,
        decomposition,
    })
}
