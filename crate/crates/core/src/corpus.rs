//! Seeded random generators for test corpora: ring elements, words of
//! elementary matrices in the congruence group, and canonical factors for
//! synthesizing decompositions.
//!
//! Everything is driven by an explicit [`rand::Rng`] so corpora are
//! reproducible from a seed ([`seeded_rng`]). Congruence-group members are
//! produced as words in the elementary generators `I + 3t*e(i,j)`
//! ([`gamma3_word`], [`compose_gamma3_word`]) rather than by rejection,
//! which keeps entries small and generation fast.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decompose::{DiagonalUnit, UnipotentMod3};
use crate::eisenstein::EisensteinInt;
use crate::matrix::Mat3;
use crate::steinberg::{reduce_pair, YMatrix};

/// A reproducible generator for the given seed.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A ring element with both coordinates uniform in `-bound..=bound`.
pub fn random_element(rng: &mut impl Rng, bound: i64) -> EisensteinInt {
    EisensteinInt::new(
        rng.random_range(-bound..=bound),
        rng.random_range(-bound..=bound),
    )
}

/// Like [`random_element`], but never zero.
pub fn random_nonzero_element(rng: &mut impl Rng, bound: i64) -> EisensteinInt {
    loop {
        let x = random_element(rng, bound);
        if !x.is_zero() {
            return x;
        }
    }
}

/// One of the six units, uniformly.
pub fn random_unit(rng: &mut impl Rng) -> EisensteinInt {
    EisensteinInt::units()[rng.random_range(0..6)].clone()
}

/// One factor `I + 3*scale*e(row, col)` of a congruence-group word
/// (`row != col`, zero-based, `scale` nonzero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryMove {
    pub row: usize,
    pub col: usize,
    pub scale: EisensteinInt,
}

impl ElementaryMove {
    pub fn to_mat3(&self) -> Mat3 {
        elementary(self.row, self.col, &(&EisensteinInt::new(3, 0) * &self.scale))
    }
}

fn elementary(row: usize, col: usize, value: &EisensteinInt) -> Mat3 {
    debug_assert!(row != col && row < 3 && col < 3);
    Mat3::new(std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            if i == j {
                EisensteinInt::one()
            } else if i == row && j == col {
                value.clone()
            } else {
                EisensteinInt::zero()
            }
        })
    }))
}

fn random_offdiagonal(rng: &mut impl Rng) -> (usize, usize) {
    let row = rng.random_range(0..3);
    let col = (row + rng.random_range(1..3)) % 3;
    (row, col)
}

/// A word of `0..=max_len` elementary moves with small nonzero scales.
pub fn gamma3_word(rng: &mut impl Rng, max_len: usize) -> Vec<ElementaryMove> {
    let len = rng.random_range(0..=max_len);
    (0..len)
        .map(|_| {
            let (row, col) = random_offdiagonal(rng);
            ElementaryMove {
                row,
                col,
                scale: random_nonzero_element(rng, 2),
            }
        })
        .collect()
}

/// The ordered product of a word's factors.
pub fn compose_gamma3_word(word: &[ElementaryMove]) -> Mat3 {
    let mut acc = Mat3::identity();
    for mv in word {
        acc = &acc * &mv.to_mat3();
    }
    acc
}

/// A random congruence-group member as a word of at most `max_len` moves.
pub fn random_gamma3(rng: &mut impl Rng, max_len: usize) -> Mat3 {
    compose_gamma3_word(&gamma3_word(rng, max_len))
}

/// A random determinant-1 matrix (no congruence constraint), as a word of
/// elementary matrices with small entries.
pub fn random_sl3(rng: &mut impl Rng, max_len: usize) -> Mat3 {
    let len = rng.random_range(0..=max_len);
    let mut acc = Mat3::identity();
    for _ in 0..len {
        let (row, col) = random_offdiagonal(rng);
        acc = &acc * &elementary(row, col, &random_nonzero_element(rng, 2));
    }
    acc
}

/// A random upper unipotent congruent to the identity mod 3, with entries
/// `3t` for `t` bounded by `bound`.
pub fn random_gamma_inf3(rng: &mut impl Rng, bound: i64) -> Mat3 {
    let three = EisensteinInt::new(3, 0);
    let zero = EisensteinInt::zero;
    let one = EisensteinInt::one;
    Mat3::new([
        [
            one(),
            &three * &random_element(rng, bound),
            &three * &random_element(rng, bound),
        ],
        [zero(), one(), &three * &random_element(rng, bound)],
        [zero(), zero(), one()],
    ])
}

/// A random transversal member obtained by reducing a random pair with
/// nonzero second entry; always distinct from the identity.
pub fn random_y_nonidentity(rng: &mut impl Rng, bound: i64) -> YMatrix {
    loop {
        let a = random_element(rng, bound);
        let b = random_nonzero_element(rng, bound);
        let (y, _) = reduce_pair(&a, &b).expect("pair with nonzero entry reduces");
        if !y.is_identity() {
            return y;
        }
    }
}

/// A random transversal member, identity included (roughly one time in
/// eight).
pub fn random_y(rng: &mut impl Rng, bound: i64) -> YMatrix {
    if rng.random_range(0..8) == 0 {
        YMatrix::identity()
    } else {
        random_y_nonidentity(rng, bound)
    }
}

/// A random diagonal of units with product 1.
pub fn random_diagonal_unit(rng: &mut impl Rng) -> DiagonalUnit {
    let i = random_unit(rng);
    let j = random_unit(rng);
    let k = (&i * &j)
        .unit_inverse()
        .expect("product of units is a unit");
    DiagonalUnit::try_new(i, j, k).expect("constructed diagonal is valid")
}

/// A random canonical unipotent: entries with coordinates in `0..3`.
pub fn random_unipotent_mod3(rng: &mut impl Rng) -> UnipotentMod3 {
    let mut entry =
        || EisensteinInt::new(rng.random_range(0..3i64), rng.random_range(0..3i64));
    let alpha = entry();
    let beta = entry();
    let gamma = entry();
    UnipotentMod3::try_new(alpha, beta, gamma).expect("entries are canonical mod 3")
}
