//! Cell classification and the canonical right / left decompositions of
//! unimodular 3x3 matrices.
//!
//! Every determinant-1 matrix factors uniquely (under the crate's
//! canonical-form policies) as
//!
//! - right form: `phi2(y1)^-1 * phi1(y2)^-1 * phi2(y3)^-1 * d * u * C`,
//! - left form: `C * u * d * phi1(y3) * phi2(y2) * phi1(y1)`,
//!
//! with the `y`s in the Steinberg transversal Y, `d` a diagonal of units
//! with product 1 ([`DiagonalUnit`]), `u` upper unipotent with entries in
//! {0,1,2} + {0,1,2}w ([`UnipotentMod3`]), and `C` upper unipotent and
//! congruent to the identity mod 3.
//!
//! Which `y` factors are nontrivial is governed by the cell of the matrix
//! ([`CellTag`], [`classify_cell`]): in the `Delta2` cell only the `y1` slot
//! carries a factor, in `Delta10` the `y2` slot joins in, and in `Delta11`
//! all of `y2`, `y3` are nontrivial. The right decomposition is computed by
//! three Steinberg reduction steps followed by a diagonal/unipotent split;
//! the left one by conjugating through the first adjugate and splitting its
//! unipotent part as a product `K * L` with `K` congruent to the identity
//! mod 3 and `L` canonical mod 3.
//!
//! Decompositions serialize as JSON objects listing the factors in
//! composition order, matrices in the matrix text form.

use std::fmt;

use serde::ser::SerializeMap;

use crate::eisenstein::EisensteinInt;
use crate::gamma::in_gamma_inf3;
use crate::matrix::{phi1, phi2, Mat3};
use crate::steinberg::{exact_div, reduce_pair, YMatrix};
use crate::Error;

/// The cell of a unimodular matrix, read off the first column's subdiagonal
/// and the lower-left 2x2 minor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellTag {
    /// `a21 = a31 = 0`.
    Delta2,
    /// First column subdiagonal nonzero but `a21*a32 - a22*a31 = 0`.
    Delta10,
    /// `a21*a32 - a22*a31 != 0`.
    Delta11,
}

impl CellTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CellTag::Delta2 => "Delta2",
            CellTag::Delta10 => "Delta10",
            CellTag::Delta11 => "Delta11",
        }
    }
}

impl fmt::Display for CellTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl serde::Serialize for CellTag {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Diagonal matrix `diag(i, j, k)` of units with `i*j*k = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalUnit {
    i: EisensteinInt,
    j: EisensteinInt,
    k: EisensteinInt,
}

impl DiagonalUnit {
    pub fn try_new(i: EisensteinInt, j: EisensteinInt, k: EisensteinInt) -> Result<Self, Error> {
        if !i.is_unit() || !j.is_unit() || !k.is_unit() {
            return Err(Error::Internal("diagonal entries must be units"));
        }
        if !(&(&i * &j) * &k).is_one() {
            return Err(Error::Internal("diagonal unit product must be 1"));
        }
        Ok(DiagonalUnit { i, j, k })
    }

    pub fn identity() -> Self {
        DiagonalUnit {
            i: EisensteinInt::one(),
            j: EisensteinInt::one(),
            k: EisensteinInt::one(),
        }
    }

    pub fn i(&self) -> &EisensteinInt {
        &self.i
    }
    pub fn j(&self) -> &EisensteinInt {
        &self.j
    }
    pub fn k(&self) -> &EisensteinInt {
        &self.k
    }

    pub fn is_identity(&self) -> bool {
        self.i.is_one() && self.j.is_one() && self.k.is_one()
    }

    pub fn to_mat3(&self) -> Mat3 {
        let zero = EisensteinInt::zero;
        Mat3::new([
            [self.i.clone(), zero(), zero()],
            [zero(), self.j.clone(), zero()],
            [zero(), zero(), self.k.clone()],
        ])
    }
}

/// Upper unipotent `[[1, alpha, beta], [0, 1, gamma], [0, 0, 1]]` with all
/// three entries in the canonical mod-3 range {0,1,2} + {0,1,2}w.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentMod3 {
    alpha: EisensteinInt,
    beta: EisensteinInt,
    gamma: EisensteinInt,
}

impl UnipotentMod3 {
    pub fn try_new(
        alpha: EisensteinInt,
        beta: EisensteinInt,
        gamma: EisensteinInt,
    ) -> Result<Self, Error> {
        for entry in [&alpha, &beta, &gamma] {
            if entry.mod3() != *entry {
                return Err(Error::Internal(
                    "unipotent entries must lie in the canonical mod-3 range",
                ));
            }
        }
        Ok(UnipotentMod3 { alpha, beta, gamma })
    }

    pub fn identity() -> Self {
        UnipotentMod3 {
            alpha: EisensteinInt::zero(),
            beta: EisensteinInt::zero(),
            gamma: EisensteinInt::zero(),
        }
    }

    pub fn alpha(&self) -> &EisensteinInt {
        &self.alpha
    }
    pub fn beta(&self) -> &EisensteinInt {
        &self.beta
    }
    pub fn gamma(&self) -> &EisensteinInt {
        &self.gamma
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero()
    }

    pub fn to_mat3(&self) -> Mat3 {
        let zero = EisensteinInt::zero;
        let one = EisensteinInt::one;
        Mat3::new([
            [one(), self.alpha.clone(), self.beta.clone()],
            [zero(), one(), self.gamma.clone()],
            [zero(), zero(), one()],
        ])
    }
}

/// Factors of the right decomposition
/// `A = phi2(y1)^-1 * phi1(y2)^-1 * phi2(y3)^-1 * d * u * C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightDecomposition {
    pub y1: YMatrix,
    pub y2: YMatrix,
    pub y3: YMatrix,
    pub d: DiagonalUnit,
    pub u: UnipotentMod3,
    pub c: Mat3,
    pub cell: CellTag,
}

/// Factors of the left decomposition
/// `A = C * u * d * phi1(y3) * phi2(y2) * phi1(y1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftDecomposition {
    pub c: Mat3,
    pub u: UnipotentMod3,
    pub d: DiagonalUnit,
    pub y3: YMatrix,
    pub y2: YMatrix,
    pub y1: YMatrix,
    pub cell: CellTag,
}

impl RightDecomposition {
    /// The exact ordered product of the factors.
    pub fn recompose(&self) -> Mat3 {
        let head = &phi2(&self.y1.inverse()) * &phi1(&self.y2.inverse());
        let head = &head * &phi2(&self.y3.inverse());
        let tail = &self.d.to_mat3() * &self.u.to_mat3();
        &(&head * &tail) * &self.c
    }

    /// Do the identity / non-identity patterns of the `y` factors match the
    /// cell tag?
    pub fn shape_matches_cell(&self) -> bool {
        shape_matches(self.cell, &self.y2, &self.y3)
    }
}

impl LeftDecomposition {
    /// The exact ordered product of the factors.
    pub fn recompose(&self) -> Mat3 {
        let head = &(&self.c * &self.u.to_mat3()) * &self.d.to_mat3();
        let tail = &(&phi1(self.y3.matrix()) * &phi2(self.y2.matrix())) * &phi1(self.y1.matrix());
        &head * &tail
    }

    pub fn shape_matches_cell(&self) -> bool {
        shape_matches(self.cell, &self.y2, &self.y3)
    }
}

fn shape_matches(cell: CellTag, y2: &YMatrix, y3: &YMatrix) -> bool {
    match cell {
        CellTag::Delta2 => y2.is_identity() && y3.is_identity(),
        CellTag::Delta10 => !y2.is_identity() && y3.is_identity(),
        CellTag::Delta11 => !y2.is_identity() && !y3.is_identity(),
    }
}

macro_rules! serialize_decomposition {
    ($ty:ident, $($field:ident => $key:literal),+) => {
        impl serde::Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(7))?;
                map.serialize_entry("cell", &self.cell)?;
                $(serialize_decomposition!(@entry self, map, $field, $key);)+
                map.end()
            }
        }
    };
    (@entry $self:ident, $map:ident, d, $key:literal) => {
        $map.serialize_entry($key, &$self.d.to_mat3())?;
    };
    (@entry $self:ident, $map:ident, u, $key:literal) => {
        $map.serialize_entry($key, &$self.u.to_mat3())?;
    };
    (@entry $self:ident, $map:ident, $field:ident, $key:literal) => {
        $map.serialize_entry($key, &$self.$field)?;
    };
}

serialize_decomposition!(LeftDecomposition,
    c => "C", u => "u", d => "d", y3 => "y3", y2 => "y2", y1 => "y1");
serialize_decomposition!(RightDecomposition,
    y1 => "y1", y2 => "y2", y3 => "y3", d => "d", u => "u", c => "C");

/// The cell of a determinant-1 matrix.
pub fn classify_cell(m: &Mat3) -> Result<CellTag, Error> {
    if !m.det().is_one() {
        return Err(Error::NonUnimodular);
    }
    let sub1 = m.entry(1, 0);
    let sub2 = m.entry(2, 0);
    if sub1.is_zero() && sub2.is_zero() {
        return Ok(CellTag::Delta2);
    }
    let minor = m.entry(1, 0) * m.entry(2, 1) - m.entry(1, 1) * m.entry(2, 0);
    if minor.is_zero() {
        Ok(CellTag::Delta10)
    } else {
        Ok(CellTag::Delta11)
    }
}

/// Compute the right decomposition by three Steinberg reduction steps on the
/// first column and the second column's subdiagonal, then split the
/// resulting upper-triangular matrix into diagonal, canonical unipotent, and
/// congruence parts.
pub fn decompose_right(m: &Mat3) -> Result<RightDecomposition, Error> {
    let cell = classify_cell(m)?; // also rejects non-unimodular input

    // Step 1: clear the (3,1) entry by reducing (a21, a31).
    let z1 = if m.entry(1, 0).is_zero() && m.entry(2, 0).is_zero() {
        YMatrix::identity()
    } else {
        reduce_pair(m.entry(1, 0), m.entry(2, 0))?.0
    };
    let stage1 = &phi2(z1.matrix()) * m;
    if !stage1.entry(2, 0).is_zero() {
        return Err(Error::Internal("step 1 failed to clear the (3,1) entry"));
    }

    // Step 2: clear the (2,1) entry by reducing (a11, a21).
    if stage1.entry(0, 0).is_zero() && stage1.entry(1, 0).is_zero() {
        return Err(Error::Internal("first column of a unimodular matrix vanished"));
    }
    let z2 = reduce_pair(stage1.entry(0, 0), stage1.entry(1, 0))?.0;
    let stage2 = &phi1(z2.matrix()) * &stage1;
    if !stage2.entry(1, 0).is_zero() || !stage2.entry(2, 0).is_zero() {
        return Err(Error::Internal("step 2 failed to clear the first column"));
    }
    // The pivot is the gcd of the first column, necessarily a unit.
    if !stage2.entry(0, 0).is_unit() {
        return Err(Error::Internal(
            "first-column gcd of a unimodular matrix is not a unit",
        ));
    }

    // Step 3: clear the (3,2) entry by reducing (a22, a32).
    if stage2.entry(1, 1).is_zero() && stage2.entry(2, 1).is_zero() {
        return Err(Error::Internal("lower 2x2 block of a unimodular matrix vanished"));
    }
    let z3 = reduce_pair(stage2.entry(1, 1), stage2.entry(2, 1))?.0;
    let tri = &phi2(z3.matrix()) * &stage2;
    for (i, j) in [(1, 0), (2, 0), (2, 1)] {
        if !tri.entry(i, j).is_zero() {
            return Err(Error::Internal("reduction did not reach triangular form"));
        }
    }

    // Split tri = d * u * C.
    let (d, u, c) = split_triangular(&tri)?;

    // Slot convention: in the Delta2 cell the single surviving Steinberg
    // factor (from step 3) is reported in the y1 slot. The product is
    // unchanged since both slots embed through phi2 and the factors between
    // them are the identity.
    let (y1, y2, y3) = if cell == CellTag::Delta2 {
        debug_assert!(z1.is_identity() && z2.is_identity());
        (z3, YMatrix::identity(), YMatrix::identity())
    } else {
        (z1, z2, z3)
    };

    let dec = RightDecomposition {
        y1,
        y2,
        y3,
        d,
        u,
        c,
        cell,
    };
    if !dec.shape_matches_cell() {
        return Err(Error::Internal("factor shape inconsistent with the cell"));
    }
    Ok(dec)
}

/// Split an upper-triangular unimodular matrix `T = diag(p, q, r) * N` into
/// `d * u * C` with `u` canonical mod 3 and `C` congruent to the identity.
fn split_triangular(tri: &Mat3) -> Result<(DiagonalUnit, UnipotentMod3, Mat3), Error> {
    let p = tri.entry(0, 0).clone();
    let q = tri.entry(1, 1).clone();
    let r = tri.entry(2, 2).clone();
    if !p.is_unit() || !q.is_unit() || !r.is_unit() {
        return Err(Error::Internal("triangular diagonal entries are not units"));
    }
    let d = DiagonalUnit::try_new(p.clone(), q.clone(), r.clone())?;

    // Strict upper entries of T itself; note qr = p^-1 and pr = q^-1.
    let x = tri.entry(0, 1);
    let y = tri.entry(0, 2);
    let z = tri.entry(1, 2);
    let qr = &q * &r;
    let pr = &p * &r;
    let nx = &qr * x; // (1,2) entry of d^-1 * T
    let ny = &qr * y; // (1,3)
    let nz = &pr * z; // (2,3)

    let alpha = nx.mod3();
    let gamma = nz.mod3();
    let c23 = &nz - &gamma;
    let beta = (&ny - &(&alpha * &c23)).mod3();
    let u = UnipotentMod3::try_new(alpha.clone(), beta.clone(), gamma)?;

    let c12 = &nx - &alpha;
    let c13 = &ny - &(&alpha * &c23) - &beta;
    let zero = EisensteinInt::zero;
    let one = EisensteinInt::one;
    let c = Mat3::new([
        [one(), c12, c13],
        [zero(), one(), c23],
        [zero(), zero(), one()],
    ]);
    if !in_gamma_inf3(&c) {
        return Err(Error::Internal("congruence factor failed its membership check"));
    }
    Ok((d, u, c))
}

/// Compute the left decomposition through the first adjugate: right-decompose
/// `upsilon1(A)`, pull the factors back, and split the resulting unipotent
/// as `K * L` (`K` congruent to the identity mod 3, `L` canonical mod 3).
pub fn decompose_left(m: &Mat3) -> Result<LeftDecomposition, Error> {
    if !m.det().is_one() {
        return Err(Error::NonUnimodular);
    }
    let right = decompose_right(&m.upsilon1())?;

    // A = Y(C) * Y(u) * Y(d) * phi1(y3) * phi2(y2) * phi1(y1), writing Y for
    // upsilon1. Split Y(u) = K * L so the mod-3 content lands in L.
    let uu = right.u.to_mat3().upsilon1();
    let x = right.u.alpha();
    let y = right.u.beta();
    let z = right.u.gamma();
    let three = EisensteinInt::new(3, 0);
    let neg_z3 = (-z).mod3();
    let y3 = y.mod3();
    let neg_x3 = (-x).mod3();
    let mm = exact_div(&(&-z - &neg_z3), &three)
        .ok_or(Error::Internal("unipotent split: m is not integral"))?;
    let nn = exact_div(&(y - &y3), &three)
        .ok_or(Error::Internal("unipotent split: n is not integral"))?;
    let pp = exact_div(&(&-x - &neg_x3), &three)
        .ok_or(Error::Internal("unipotent split: p is not integral"))?;

    let zero = EisensteinInt::zero;
    let one = EisensteinInt::one;
    let k12 = &three * &mm;
    let k13 = &(&k12 * x) + &(&(&three * &mm) * &(&three * &pp)) + &(&three * &nn);
    let k23 = &three * &pp;
    let k = Mat3::new([
        [one(), k12, k13],
        [zero(), one(), k23],
        [zero(), zero(), one()],
    ]);
    let l = UnipotentMod3::try_new(neg_z3, y3, neg_x3)?;
    if &k * &l.to_mat3() != uu {
        return Err(Error::Internal("unipotent split K*L does not reproduce the factor"));
    }
    if !in_gamma_inf3(&k) {
        return Err(Error::Internal("unipotent split: K failed its membership check"));
    }

    let c_left = &right.c.upsilon1() * &k;
    if !in_gamma_inf3(&c_left) {
        return Err(Error::Internal("left congruence factor failed its membership check"));
    }
    let d_left = DiagonalUnit::try_new(
        right.d.k().clone(),
        right.d.j().clone(),
        right.d.i().clone(),
    )?;

    Ok(LeftDecomposition {
        c: c_left,
        u: l,
        d: d_left,
        y3: right.y3,
        y2: right.y2,
        y1: right.y1,
        cell: right.cell,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::in_gamma3;
    use crate::matrix::Mat2;

    fn e(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    fn sample() -> Mat3 {
        Mat3::from_ints([[4, -3, -12], [-3, 4, 15], [-6, 3, 13]])
    }

    fn sample_omega() -> Mat3 {
        Mat3::new([
            [e(-11, -3), e(-3, -3), e(0, -3)],
            [e(-24, -33), e(-2, -12), e(12, 3)],
            [e(-3, 6), e(-3, 0), e(-2, -3)],
        ])
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_cell(&Mat3::identity()).unwrap(), CellTag::Delta2);
        assert_eq!(classify_cell(&sample()).unwrap(), CellTag::Delta11);
        let rotate = phi1(&Mat2::from_ints([[0, -1], [1, 0]]));
        assert_eq!(classify_cell(&rotate).unwrap(), CellTag::Delta10);
        let double = Mat3::from_ints([[2, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(classify_cell(&double), Err(Error::NonUnimodular));
    }

    #[test]
    fn decompose_right_identity() {
        let dec = decompose_right(&Mat3::identity()).unwrap();
        assert!(dec.y1.is_identity() && dec.y2.is_identity() && dec.y3.is_identity());
        assert!(dec.d.is_identity());
        assert!(dec.u.is_identity());
        assert!(dec.c.is_identity());
        assert_eq!(dec.cell, CellTag::Delta2);
        assert!(dec.recompose().is_identity());
    }

    #[test]
    fn decompose_right_of_congruence_unipotent() {
        let c0 = Mat3::from_ints([[1, 3, -6], [0, 1, 9], [0, 0, 1]]);
        let dec = decompose_right(&c0).unwrap();
        assert!(dec.y1.is_identity() && dec.y2.is_identity() && dec.y3.is_identity());
        assert!(dec.d.is_identity());
        assert!(dec.u.is_identity());
        assert_eq!(dec.c, c0);
        assert_eq!(dec.recompose(), c0);
    }

    #[test]
    fn decompose_right_of_small_unipotent() {
        // entries not divisible by 3 land in u, the rest in C
        let t = Mat3::from_ints([[1, 4, 0], [0, 1, 1], [0, 0, 1]]);
        let dec = decompose_right(&t).unwrap();
        assert!(dec.d.is_identity());
        assert_eq!(dec.u.alpha(), &e(1, 0));
        assert_eq!(dec.u.gamma(), &e(1, 0));
        assert_eq!(dec.recompose(), t);
    }

    #[test]
    fn decompose_samples_roundtrip_both_sides() {
        for m in [sample(), sample_omega()] {
            let right = decompose_right(&m).unwrap();
            assert_eq!(right.recompose(), m);
            assert!(right.shape_matches_cell());

            let left = decompose_left(&m).unwrap();
            assert_eq!(left.recompose(), m);
            assert!(left.shape_matches_cell());
            assert_eq!(left.cell, classify_cell(&m.upsilon1()).unwrap());
        }
    }

    #[test]
    fn left_factors_of_members_stay_in_gamma3() {
        let m = sample();
        assert!(in_gamma3(&m));
        let left = decompose_left(&m).unwrap();
        assert!(in_gamma_inf3(&left.c));
        assert_eq!(left.cell, CellTag::Delta11);
        // the y factors certify membership in Y by construction
        assert!(crate::steinberg::y_membership(left.y1.matrix()));
        assert!(crate::steinberg::y_membership(left.y2.matrix()));
        assert!(crate::steinberg::y_membership(left.y3.matrix()));
    }

    #[test]
    fn alternative_factor_recomposition_of_sample() {
        // A second left factorization of the same matrix (not canonical
        // under this crate's transversals) must still recompose exactly.
        let c = Mat3::from_ints([[1, 0, 15], [0, 1, -39], [0, 0, 1]]);
        let u = Mat3::identity();
        let d = Mat3::from_ints([[1, 0, 0], [0, -1, 0], [0, 0, -1]]);
        let y1 = Mat2::from_ints([[1, -1], [2, -1]]);
        let y2 = Mat2::from_ints([[2, -9], [3, -13]]);
        let y3 = Mat2::from_ints([[2, 23], [5, 58]]);
        let product = &(&(&(&(&c * &u) * &d) * &phi1(&y3)) * &phi2(&y2)) * &phi1(&y1);
        assert_eq!(product, sample());
    }

    #[test]
    fn alternative_factor_recomposition_of_omega_sample() {
        // A second factorization of the omega sample. Rows 1 and 3 of the
        // product pin every other factor; only 1+2w in the unipotent's
        // (2,3) entry makes row 2 match.
        let u = Mat3::new([
            [e(1, 0), e(0, 0), e(0, 2)],
            [e(0, 0), e(1, 0), e(1, 2)],
            [e(0, 0), e(0, 0), e(1, 0)],
        ]);
        let d = Mat3::new([
            [e(-1, -1), e(0, 0), e(0, 0)],
            [e(0, 0), e(1, 1), e(0, 0)],
            [e(0, 0), e(0, 0), e(1, 1)],
        ]);
        let y1 = Mat2::new([[e(1, 2), e(0, 1)], [e(2, 3), e(0, 1)]]);
        let y2 = Mat2::new([[e(1, 1), e(-1, -1)], [e(3, 0), e(-3, -1)]]);
        let y3 = Mat2::new([[e(2, 2), e(1, 6)], [e(3, 2), e(4, 8)]]);
        let product = &(&(&u * &d) * &(&phi1(&y3) * &phi2(&y2))) * &phi1(&y1);
        assert_eq!(product, sample_omega());
    }

    #[test]
    fn delta2_factor_lands_in_slot_one() {
        // phi2 of a nontrivial Y member is a Delta2 matrix; its factor must
        // be reported in y1 with y2 = y3 = I.
        let (y, _) = reduce_pair(&e(4, 0), &e(-3, 0)).unwrap();
        assert!(!y.is_identity());
        let m = phi2(&y.inverse());
        let dec = decompose_right(&m).unwrap();
        assert_eq!(dec.cell, CellTag::Delta2);
        assert_eq!(dec.y1, y);
        assert!(dec.y2.is_identity() && dec.y3.is_identity());
        assert_eq!(dec.recompose(), m);
    }

    #[test]
    fn wedge_transport_on_delta11() {
        // In the Delta11 cell the (3,1) entry of the wedge matrix equals
        // d.i * d.j times the lower-left entries of y2 and y3.
        let m = sample();
        let dec = decompose_right(&m).unwrap();
        assert_eq!(dec.cell, CellTag::Delta11);
        let expected = &(dec.d.i() * dec.d.j())
            * &(dec.y2.matrix().entry(1, 0) * dec.y3.matrix().entry(1, 0));
        assert_eq!(m.lambda2().entry(2, 0), &expected);
        assert!(!expected.is_zero());
    }

    #[test]
    fn serialization_orders_factors() {
        let left = decompose_left(&sample()).unwrap();
        let json = serde_json::to_string(&left).unwrap();
        assert!(json.starts_with("{\"cell\":\"Delta11\",\"C\":"));
        let keys: Vec<usize> = ["\"cell\"", "\"C\"", "\"u\"", "\"d\"", "\"y3\"", "\"y2\"", "\"y1\""]
            .iter()
            .map(|k| json.find(k).unwrap())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted, "left factors serialize in composition order");

        let right = decompose_right(&sample()).unwrap();
        let rjson = serde_json::to_string(&right).unwrap();
        assert!(rjson.starts_with("{\"cell\":\"Delta11\",\"y1\":"));
    }

    #[test]
    fn rejects_non_unimodular() {
        let double = Mat3::from_ints([[2, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(decompose_right(&double).err(), Some(Error::NonUnimodular));
        assert_eq!(decompose_left(&double).err(), Some(Error::NonUnimodular));
    }
}
