//! Exact 2x2 and 3x3 matrix algebra over the Eisenstein integers.
//!
//! Beyond products, determinants, and unimodular inverses, the module
//! provides the operators the decomposition theory runs on:
//!
//! - [`Mat3::lambda2`]: the wedge-product matrix of all 2x2 minors, in the
//!   fixed row arrangement whose bottom row feeds the orbit invariants;
//! - [`Mat3::upsilon1`]: the first adjugate, an anti-homomorphism with
//!   `lambda2(A) * upsilon1(A) = det(A) * I`, and an involution;
//! - [`Mat3::iota`]: the involution `J * (A^-1)^T * J` (J the antidiagonal
//!   permutation), conjugate to `lambda2` by `diag(1, -1, 1)`;
//! - [`phi1`] / [`phi2`]: the block embeddings of 2x2 matrices into the
//!   upper-left and lower-right corners, swapped by `lambda2`.
//!
//! Matrices serialize as JSON arrays of rows of element strings, e.g.
//! `[["4+0*w","-3+0*w","-12+0*w"], ...]`.

use std::fmt;
use std::ops::Mul;

use crate::eisenstein::EisensteinInt;
use crate::Error;

/// Exact 2x2 matrix over Z[w].
#[derive(Clone, PartialEq, Eq)]
pub struct Mat2 {
    rows: [[EisensteinInt; 2]; 2],
}

/// Exact 3x3 matrix over Z[w].
#[derive(Clone, PartialEq, Eq)]
pub struct Mat3 {
    rows: [[EisensteinInt; 3]; 3],
}

impl Mat2 {
    pub fn new(rows: [[EisensteinInt; 2]; 2]) -> Self {
        Mat2 { rows }
    }

    /// Convenience constructor from plain integers (tests, corpora).
    pub fn from_ints(rows: [[i64; 2]; 2]) -> Self {
        Mat2::new(rows.map(|r| r.map(|x| EisensteinInt::new(x, 0))))
    }

    pub fn identity() -> Self {
        Mat2::from_ints([[1, 0], [0, 1]])
    }

    /// Entry in row `i`, column `j` (0-based).
    pub fn entry(&self, i: usize, j: usize) -> &EisensteinInt {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[[EisensteinInt; 2]; 2] {
        &self.rows
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity()
    }

    pub fn det(&self) -> EisensteinInt {
        let r = &self.rows;
        &r[0][0] * &r[1][1] - &r[0][1] * &r[1][0]
    }

    /// Inverse of a determinant-1 matrix: `[[s, -q], [-r, p]]`.
    pub fn inverse_unimodular(&self) -> Result<Mat2, Error> {
        if !self.det().is_one() {
            return Err(Error::NonUnimodular);
        }
        let r = &self.rows;
        Ok(Mat2::new([
            [r[1][1].clone(), -&r[0][1]],
            [-&r[1][0], r[0][0].clone()],
        ]))
    }
}

impl Mat3 {
    pub fn new(rows: [[EisensteinInt; 3]; 3]) -> Self {
        Mat3 { rows }
    }

    /// Convenience constructor from plain integers (tests, corpora).
    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Mat3::new(rows.map(|r| r.map(|x| EisensteinInt::new(x, 0))))
    }

    pub fn identity() -> Self {
        Mat3::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    /// Entry in row `i`, column `j` (0-based).
    pub fn entry(&self, i: usize, j: usize) -> &EisensteinInt {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[[EisensteinInt; 3]; 3] {
        &self.rows
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat3::identity()
    }

    pub fn transpose(&self) -> Mat3 {
        Mat3::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.rows[j][i].clone())
        }))
    }

    pub fn det(&self) -> EisensteinInt {
        let [[a, b, c], [d, e, f], [g, h, i]] = &self.rows;
        a * &(e * i - f * h) - b * &(d * i - f * g) + c * &(d * h - e * g)
    }

    /// The wedge-product matrix of 2x2 minors, rows arranged as
    /// `(ae-bd, af-cd, bf-ec) / (ah-bg, ai-cg, bi-hc) / (dh-eg, di-fg, ei-fh)`
    /// for `A = [[a,b,c],[d,e,f],[g,h,i]]`. Multiplicative in `A`.
    pub fn lambda2(&self) -> Mat3 {
        let [[a, b, c], [d, e, f], [g, h, i]] = &self.rows;
        Mat3::new([
            [a * e - b * d, a * f - c * d, b * f - e * c],
            [a * h - b * g, a * i - c * g, b * i - h * c],
            [d * h - e * g, d * i - f * g, e * i - f * h],
        ])
    }

    /// The first adjugate `[[i, -f, c], [-h, e, -b], [g, -d, a]]`.
    ///
    /// Satisfies `lambda2(A) * upsilon1(A) = det(A) * I`, reverses products,
    /// and is an involution.
    pub fn upsilon1(&self) -> Mat3 {
        let [[a, b, c], [d, e, f], [g, h, i]] = &self.rows;
        Mat3::new([
            [i.clone(), -f, c.clone()],
            [-h, e.clone(), -b],
            [g.clone(), -d, a.clone()],
        ])
    }

    /// Classical adjugate (transpose of cofactors), written out longhand so
    /// it is independent of [`Mat3::lambda2`] / [`Mat3::upsilon1`]; the
    /// identity `adjugate = upsilon1(lambda2(A))` is verified in tests.
    pub fn adjugate(&self) -> Mat3 {
        let [[a, b, c], [d, e, f], [g, h, i]] = &self.rows;
        Mat3::new([
            [e * i - f * h, c * h - b * i, b * f - c * e],
            [f * g - d * i, a * i - c * g, c * d - a * f],
            [d * h - e * g, b * g - a * h, a * e - b * d],
        ])
    }

    /// Exact inverse of a determinant-1 matrix via the classical adjugate.
    pub fn inverse_unimodular(&self) -> Result<Mat3, Error> {
        if !self.det().is_one() {
            return Err(Error::NonUnimodular);
        }
        Ok(self.adjugate())
    }

    /// The involution `iota(A) = J * (A^-1)^T * J`, with `J` the antidiagonal
    /// permutation. Conjugating by `diag(1, -1, 1)` turns it into
    /// [`Mat3::lambda2`]; requires determinant 1.
    pub fn iota(&self) -> Result<Mat3, Error> {
        let t = self.inverse_unimodular()?.transpose();
        // J * M * J reverses both row and column order.
        Ok(Mat3::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| t.rows[2 - i][2 - j].clone())
        })))
    }
}

/// Embed a 2x2 matrix into the upper-left block, with 1 at (3,3).
pub fn phi1(y: &Mat2) -> Mat3 {
    let zero = EisensteinInt::zero;
    let r = y.rows();
    Mat3::new([
        [r[0][0].clone(), r[0][1].clone(), zero()],
        [r[1][0].clone(), r[1][1].clone(), zero()],
        [zero(), zero(), EisensteinInt::one()],
    ])
}

/// Embed a 2x2 matrix into the lower-right block, with 1 at (1,1).
pub fn phi2(y: &Mat2) -> Mat3 {
    let zero = EisensteinInt::zero;
    let r = y.rows();
    Mat3::new([
        [EisensteinInt::one(), zero(), zero()],
        [zero(), r[0][0].clone(), r[0][1].clone()],
        [zero(), r[1][0].clone(), r[1][1].clone()],
    ])
}

impl<'b> Mul<&'b Mat2> for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &'b Mat2) -> Mat2 {
        Mat2::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..2).fold(EisensteinInt::zero(), |acc, k| {
                    acc + &self.rows[i][k] * &rhs.rows[k][j]
                })
            })
        }))
    }
}

impl<'b> Mul<&'b Mat3> for &Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: &'b Mat3) -> Mat3 {
        Mat3::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(EisensteinInt::zero(), |acc, k| {
                    acc + &self.rows[i][k] * &rhs.rows[k][j]
                })
            })
        }))
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

impl Mul for Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: Mat3) -> Mat3 {
        &self * &rhs
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        write!(f, "{:?}", rows)
    }
}

impl fmt::Debug for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        write!(f, "{:?}", rows)
    }
}

// --- serde: arrays of rows of element strings ------------------------------

macro_rules! matrix_serde {
    ($ty:ident, $n:literal) => {
        impl serde::Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                use serde::ser::SerializeSeq;
                let mut seq = serializer.serialize_seq(Some($n))?;
                for row in &self.rows {
                    seq.serialize_element(&row[..])?;
                }
                seq.end()
            }
        }

        impl<'de> serde::Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                use serde::de::Error as _;
                let rows = Vec::<Vec<EisensteinInt>>::deserialize(deserializer)?;
                if rows.len() != $n || rows.iter().any(|r| r.len() != $n) {
                    return Err(D::Error::custom(concat!(
                        "expected ",
                        $n,
                        " rows of ",
                        $n,
                        " elements"
                    )));
                }
                let mut it = rows.into_iter();
                Ok($ty::new(std::array::from_fn(|_| {
                    let row: Vec<EisensteinInt> = it.next().expect("length checked");
                    let mut er = row.into_iter();
                    std::array::from_fn(|_| er.next().expect("length checked"))
                })))
            }
        }
    };
}

matrix_serde!(Mat2, 2);
matrix_serde!(Mat3, 3);

/// Scalar multiple helper used in a few places (e.g. `det(A) * I`).
pub fn scalar_mat3(x: &EisensteinInt) -> Mat3 {
    let zero = EisensteinInt::zero;
    Mat3::new([
        [x.clone(), zero(), zero()],
        [zero(), x.clone(), zero()],
        [zero(), zero(), x.clone()],
    ])
}
