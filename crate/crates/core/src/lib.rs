//! Exact arithmetic for orbit problems of the level-3 congruence subgroup of
//! SL3 over the Eisenstein integers.
//!
//! The crate is layered bottom-up:
//!
//! - [`eisenstein`]: the ring Z[w] (w^2 = -1 - w) with Euclidean division,
//!   gcd machinery, and the canonical-form policies (unit-normal associates,
//!   residue transversals, the mod-3 map) everything else depends on.
//! - [`matrix`]: exact 2x2 / 3x3 matrices over the ring, the wedge-product
//!   matrix, the first adjugate, the involution iota, and the block
//!   embeddings phi1 / phi2.
//! - [`steinberg`]: the transversal set Y of SL2 matrices and the canonical
//!   reduction of a pair (a, b) to (gcd, 0).
//! - [`gamma`]: membership tests for Gamma(3) and its upper-unipotent
//!   subgroup, the six-component orbit invariant, condition checking, and the
//!   two-route orbit-equality test.
//! - [`decompose`]: cell classification and the canonical right and left
//!   decompositions into Steinberg, diagonal-unit, unipotent, and congruence
//!   factors.
//! - [`represent`]: construction of the canonical orbit representative from a
//!   valid invariant tuple (five cases).
//! - [`corpus`]: seeded random generators for all of the above, shared by the
//!   test suites and the CLI.

pub mod corpus;
pub mod decompose;
pub mod eisenstein;
mod error;
pub mod gamma;
pub mod matrix;
pub mod represent;
pub mod steinberg;

pub use error::Error;
