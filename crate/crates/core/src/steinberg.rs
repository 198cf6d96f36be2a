//! Steinberg reduction: the canonical SL2 matrix carrying a pair (a, b) to
//! (gcd(a, b), 0).
//!
//! The module provides:
//!
//! - [`YMatrix`], a 2x2 matrix certified to lie in the transversal set Y:
//!   either the identity, or determinant 1 with a nonzero unit-normal
//!   lower-left entry and a residue-normalized upper-left entry;
//! - [`y_membership`], the raw membership predicate;
//! - [`reduce_pair`], which produces the unique such matrix annihilating the
//!   second coordinate of a pair, together with the exact associate of the
//!   gcd it produces (the associate matters for diagonal bookkeeping
//!   downstream, so it is returned rather than recomputed).

use crate::eisenstein::{extended_gcd, gcd, EisensteinInt};
use crate::matrix::Mat2;
use crate::Error;

/// A `Mat2` certified to lie in the transversal set Y.
///
/// Membership means: the identity, or determinant 1 with `r` (lower-left)
/// nonzero and unit-normal, and `p` (upper-left) equal to its own residue
/// mod `r`. Construct via [`YMatrix::try_from_mat`] or [`reduce_pair`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YMatrix {
    inner: Mat2,
}

impl YMatrix {
    pub fn identity() -> Self {
        YMatrix {
            inner: Mat2::identity(),
        }
    }

    /// Certify an arbitrary matrix, rejecting non-members.
    pub fn try_from_mat(m: Mat2) -> Result<Self, Error> {
        if y_membership(&m) {
            Ok(YMatrix { inner: m })
        } else {
            Err(Error::Internal("matrix does not lie in the Y transversal"))
        }
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.inner
    }

    pub fn is_identity(&self) -> bool {
        self.inner.is_identity()
    }

    /// Exact inverse `[[s, -q], [-r, p]]` (members have determinant 1).
    pub fn inverse(&self) -> Mat2 {
        self.inner
            .inverse_unimodular()
            .expect("Y members have determinant 1")
    }
}

impl serde::Serialize for YMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.inner.serialize(serializer)
    }
}

/// Does `m` lie in the transversal set Y under this crate's canonical-form
/// policies?
pub fn y_membership(m: &Mat2) -> bool {
    if m.is_identity() {
        return true;
    }
    if !m.det().is_one() {
        return false;
    }
    let p = m.entry(0, 0);
    let r = m.entry(1, 0);
    if r.is_zero() || !r.is_unit_normal() {
        return false;
    }
    match p.residue_mod(r) {
        Ok(residue) => residue == *p,
        Err(_) => false,
    }
}

/// Reduce the pair `(a, b)` to `(g, 0)`: returns the unique `y` in Y with
/// `y * (a, b)^T = (g, 0)^T`, where `g` is an associate of `gcd(a, b)`.
///
/// Degenerate cases: `b = 0` yields the identity with `g = a`; `a = 0`
/// yields `[[0, -1], [1, 0]]` with `g = -b`. The pair (0, 0) is rejected.
pub fn reduce_pair(a: &EisensteinInt, b: &EisensteinInt) -> Result<(YMatrix, EisensteinInt), Error> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPair);
    }
    if b.is_zero() {
        return Ok((YMatrix::identity(), a.clone()));
    }
    if a.is_zero() {
        let y = Mat2::new([
            [EisensteinInt::zero(), -&EisensteinInt::one()],
            [EisensteinInt::one(), EisensteinInt::zero()],
        ]);
        return Ok((YMatrix { inner: y }, -b));
    }

    // Bottom row: the unique (r, s) with r*a + s*b = 0, gcd(r, s) = 1 and r
    // unit-normal. Start from (-b, a)/g0 and normalize the unit away.
    let g0 = gcd(a, b);
    let r_raw = exact_div(&-b, &g0).expect("gcd divides b");
    let s_raw = exact_div(a, &g0).expect("gcd divides a");
    let form = r_raw.unit_normalize();
    let u_inv = form.unit.unit_inverse().expect("normal form unit");
    let r = form.normal;
    let s = &u_inv * &s_raw;
    // The pivot actually produced: a = s*g, b = -r*g, so g = u * g0.
    let g = &form.unit * &g0;

    // Top row: Bezout pair with p*s - q*r = 1, then p shifted into the
    // canonical residue class mod r (shifting (p, q) by multiples of (r, s)
    // preserves the determinant).
    let (one, x, yy) = extended_gcd(&s, &r);
    if !one.is_one() {
        return Err(Error::Internal("bottom row of a Steinberg step is not coprime"));
    }
    let p0 = x;
    let q0 = -yy;
    let (v, p) = p0.divmod(&r).expect("r is nonzero here");
    let q = &q0 - &(&v * &s);

    let y = Mat2::new([[p, q], [r, s]]);
    debug_assert!(y_membership(&y));
    Ok((YMatrix { inner: y }, g))
}

/// The quotient of an exact division, or `None` when `d` does not divide `x`
/// (or is zero).
pub(crate) fn exact_div(x: &EisensteinInt, d: &EisensteinInt) -> Option<EisensteinInt> {
    let (q, r) = x.divmod(d).ok()?;
    if r.is_zero() {
        Some(q)
    } else {
        None
    }
}
