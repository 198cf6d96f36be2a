//! Arithmetic in the ring of Eisenstein integers Z[w], where w = e^(2 pi i/3)
//! satisfies w^2 = -1 - w.
//!
//! The module provides:
//!
//! - exact ring arithmetic on [`EisensteinInt`] with arbitrary-precision
//!   coefficients,
//! - the multiplicative norm `a^2 - ab + b^2`,
//! - Euclidean division ([`EisensteinInt::divmod`]) with a fixed,
//!   translation-invariant rounding rule,
//! - the canonical unit-normal associate of every element
//!   ([`EisensteinInt::unit_normalize`]),
//! - the residue transversal of the quotient by a nonzero element
//!   ([`EisensteinInt::residue_mod`]),
//! - the coefficient-wise mod-3 map with image {0,1,2} + {0,1,2}w,
//! - [`gcd`] / [`extended_gcd`] returning unit-normal generators,
//! - parsing and formatting of the `a+b*w` element grammar.
//!
//! Canonical-form policies matter here: every uniqueness statement downstream
//! assumes one fixed associate per nonzero element (the sector test
//! `0 <= b < a`) and one fixed residue per coset (rounded division with
//! half-ties toward minus infinity in each coordinate). Both policies are
//! exact integer tests; no floating point is involved anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// An exact element `a + b*w` of Z[w].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EisensteinInt {
    a: BigInt,
    b: BigInt,
}

/// The factorization `x = unit * normal` of an element into one of the six
/// units and its canonical associate.
///
/// `normal` is zero (only for x = 0) or lies in the half-open sector
/// `0 <= b < a`; `unit * normal` always reconstructs the original element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitNormalForm {
    pub unit: EisensteinInt,
    pub normal: EisensteinInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        EisensteinInt {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        EisensteinInt::new(0, 0)
    }

    pub fn one() -> Self {
        EisensteinInt::new(1, 0)
    }

    pub fn omega() -> Self {
        EisensteinInt::new(0, 1)
    }

    /// Coefficient of 1.
    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// Coefficient of w.
    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// The six units {1, -1, w, -w, w^2, -w^2}; note w^2 = -1 - w.
    pub fn units() -> [Self; 6] {
        [
            EisensteinInt::new(1, 0),
            EisensteinInt::new(-1, 0),
            EisensteinInt::new(0, 1),
            EisensteinInt::new(0, -1),
            EisensteinInt::new(-1, -1),
            EisensteinInt::new(1, 1),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Complex conjugate: conj(a + bw) = (a - b) - bw.
    pub fn conj(&self) -> Self {
        EisensteinInt::new(&self.a - &self.b, -&self.b)
    }

    /// The multiplicative norm a^2 - ab + b^2 >= 0.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Inverse of a unit (`None` for non-units). For a unit u the inverse is
    /// conj(u), since u * conj(u) = norm(u) = 1.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.is_unit() {
            Some(self.conj())
        } else {
            None
        }
    }

    /// Euclidean division: `a = q*c + r` with `norm(r) < norm(c)`.
    ///
    /// The quotient is obtained by rounding each rational coordinate of
    /// `a * conj(c) / norm(c)` to the nearest integer, half-ties toward minus
    /// infinity. The remainder's coordinates in units of the divisor then lie
    /// in (-1/2, 1/2], giving `norm(r) <= (3/4) norm(c)`, strictly less than
    /// `norm(c)`. The rule is translation-invariant: shifting `a` by a
    /// multiple of `c` shifts `q` and leaves `r` unchanged.
    pub fn divmod(&self, c: &Self) -> Result<(Self, Self), Error> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self * &c.conj();
        let big_n = c.norm();
        let one = BigInt::from(1);
        let two = BigInt::from(2);
        let round = |t: &BigInt| -> BigInt {
            // round(t / N) with half-ties toward minus infinity equals
            // floor((2t + N - 1) / (2N)) for N > 0.
            (t * &two + &big_n - &one).div_floor(&(&big_n * &two))
        };
        let q = EisensteinInt::new(round(&n.a), round(&n.b));
        let r = self - &(&q * c);
        Ok((q, r))
    }

    /// The canonical representative of `a` modulo `c`: the remainder of
    /// [`EisensteinInt::divmod`]. Translation-invariant, hence a genuine
    /// transversal function for the quotient by `c`.
    pub fn residue_mod(&self, c: &Self) -> Result<Self, Error> {
        Ok(self.divmod(c)?.1)
    }

    /// Coefficient-wise reduction mod 3 into {0,1,2} + {0,1,2}w.
    pub fn mod3(&self) -> Self {
        let three = BigInt::from(3);
        EisensteinInt {
            a: self.a.mod_floor(&three),
            b: self.b.mod_floor(&three),
        }
    }

    /// Sector test for the canonical associate: zero, or `0 <= b < a`.
    ///
    /// The sector `0 <= arg(z) < pi/3` translates exactly to this integer
    /// criterion (real part a - b/2, imaginary part b*sqrt(3)/2).
    pub fn is_unit_normal(&self) -> bool {
        self.is_zero() || (!self.b.is_negative() && self.b < self.a)
    }

    /// Factor `self = unit * normal` with `normal` the unique associate
    /// passing [`EisensteinInt::is_unit_normal`]. Zero maps to (1, 0).
    pub fn unit_normalize(&self) -> UnitNormalForm {
        if self.is_zero() {
            return UnitNormalForm {
                unit: EisensteinInt::one(),
                normal: EisensteinInt::zero(),
            };
        }
        for v in EisensteinInt::units() {
            let candidate = &v * self;
            if candidate.is_unit_normal() {
                // self = v^{-1} * candidate
                return UnitNormalForm {
                    unit: v.unit_inverse().expect("units table entry is a unit"),
                    normal: candidate,
                };
            }
        }
        unreachable!("exactly one associate of a nonzero element lies in the sector")
    }
}

/// Unit-normal generator of the ideal generated by `a` and `b`.
/// `gcd(0, 0) = 0` by convention.
pub fn gcd(a: &EisensteinInt, b: &EisensteinInt) -> EisensteinInt {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    while !r1.is_zero() {
        let (_, rem) = r0.divmod(&r1).expect("loop guard keeps divisor nonzero");
        r0 = r1;
        r1 = rem;
    }
    r0.unit_normalize().normal
}

/// Extended Euclidean algorithm: returns `(g, x, y)` with `x*a + y*b = g` and
/// `g = gcd(a, b)` unit-normal. For (0, 0) returns (0, 1, 0).
pub fn extended_gcd(
    a: &EisensteinInt,
    b: &EisensteinInt,
) -> (EisensteinInt, EisensteinInt, EisensteinInt) {
    let mut r0 = a.clone();
    let mut x0 = EisensteinInt::one();
    let mut y0 = EisensteinInt::zero();
    let mut r1 = b.clone();
    let mut x1 = EisensteinInt::zero();
    let mut y1 = EisensteinInt::one();
    while !r1.is_zero() {
        let (q, rem) = r0.divmod(&r1).expect("loop guard keeps divisor nonzero");
        let x2 = &x0 - &(&q * &x1);
        let y2 = &y0 - &(&q * &y1);
        r0 = r1;
        x0 = x1;
        y0 = y1;
        r1 = rem;
        x1 = x2;
        y1 = y2;
    }
    let form = r0.unit_normalize();
    let u_inv = form
        .unit
        .unit_inverse()
        .expect("unit_normalize returns a unit");
    (form.normal, &u_inv * &x0, &u_inv * &y0)
}

// --- operator plumbing -----------------------------------------------------

impl<'b> Add<&'b EisensteinInt> for &EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: &'b EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'b> Sub<&'b EisensteinInt> for &EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, rhs: &'b EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'b> Mul<&'b EisensteinInt> for &EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, rhs: &'b EisensteinInt) -> EisensteinInt {
        // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w, using w^2 = -1 - w.
        let (a, b, c, d) = (&self.a, &self.b, &rhs.a, &rhs.b);
        let bd = b * d;
        EisensteinInt::new(a * c - &bd, a * d + b * c - &bd)
    }
}

impl Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt::new(-&self.a, -&self.b)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for EisensteinInt {
            type Output = EisensteinInt;
            fn $method(self, rhs: EisensteinInt) -> EisensteinInt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&EisensteinInt> for EisensteinInt {
            type Output = EisensteinInt;
            fn $method(self, rhs: &EisensteinInt) -> EisensteinInt {
                (&self).$method(rhs)
            }
        }
        impl $trait<EisensteinInt> for &EisensteinInt {
            type Output = EisensteinInt;
            fn $method(self, rhs: EisensteinInt) -> EisensteinInt {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        -&self
    }
}

// --- text form -------------------------------------------------------------

impl fmt::Display for EisensteinInt {
    /// Canonical form: always both coefficients, e.g. `4+0*w`, `-3+6*w`,
    /// `3-6*w`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{}-{}*w", self.a, -&self.b)
        } else {
            write!(f, "{}+{}*w", self.a, self.b)
        }
    }
}

impl fmt::Debug for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for EisensteinInt {
    type Err = Error;

    /// Accepts an optional integer term and an optional w-term, each signed:
    /// `a`, `-a`, `b*w`, `w`, `-w`, `a+b*w`, `a-b*w`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |detail: &str| Error::Parse(format!("invalid element {:?}: {}", s, detail));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        // Split into signed terms at every '+'/'-' that is not leading.
        let mut boundaries = vec![0];
        for (i, ch) in compact.char_indices() {
            if i > 0 && (ch == '+' || ch == '-') {
                boundaries.push(i);
            }
        }
        boundaries.push(compact.len());
        if boundaries.len() > 4 {
            return Err(bad("too many terms"));
        }
        let mut int_part: Option<BigInt> = None;
        let mut omega_part: Option<BigInt> = None;
        for pair in boundaries.windows(2) {
            let term = &compact[pair[0]..pair[1]];
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, term.strip_prefix('+').unwrap_or(term)),
            };
            if body.is_empty() {
                return Err(bad("empty term"));
            }
            let parse_digits = |digits: &str| -> Result<BigInt, Error> {
                if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
                    return Err(bad("expected an unsigned integer"));
                }
                digits
                    .parse::<BigInt>()
                    .map_err(|e| bad(&format!("bad integer: {}", e)))
            };
            if body == "w" {
                if omega_part.is_some() {
                    return Err(bad("duplicate w-term"));
                }
                omega_part = Some(BigInt::from(sign));
            } else if let Some(digits) = body.strip_suffix("*w") {
                if omega_part.is_some() {
                    return Err(bad("duplicate w-term"));
                }
                omega_part = Some(parse_digits(digits)? * sign);
            } else {
                if int_part.is_some() {
                    return Err(bad("duplicate integer term"));
                }
                int_part = Some(parse_digits(body)? * sign);
            }
        }
        Ok(EisensteinInt {
            a: int_part.unwrap_or_else(BigInt::zero),
            b: omega_part.unwrap_or_else(BigInt::zero),
        })
    }
}

impl serde::Serialize for EisensteinInt {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for EisensteinInt {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct Visitor;
        impl serde::de::Visitor<'_> for Visitor {
            type Value = EisensteinInt;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an element string like \"a+b*w\"")
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<EisensteinInt, E> {
                v.parse().map_err(E::custom)
            }
        }
        deserializer.deserialize_str(Visitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    #[test]
    fn multiplication_reduces_omega_square() {
        // (1+w)^2 = 1 + 2w + w^2 = w
        assert_eq!(&e(1, 1) * &e(1, 1), e(0, 1));
        // (-w)(1+2w) = -w - 2w^2 = 2 + w
        assert_eq!(&e(0, -1) * &e(1, 2), e(2, 1));
        assert_eq!(&e(7, -3) + &EisensteinInt::zero(), e(7, -3));
    }

    #[test]
    fn norm_values() {
        assert_eq!(e(1, 2).norm(), BigInt::from(3));
        assert_eq!(e(-1, -1).norm(), BigInt::from(1));
        assert_eq!(EisensteinInt::zero().norm(), BigInt::from(0));
    }

    #[test]
    fn norm_is_multiplicative() {
        let x = e(5, -3);
        let y = e(-2, 7);
        assert_eq!((&x * &y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn conjugate_realizes_norm() {
        let x = e(4, -9);
        assert_eq!(&x * &x.conj(), EisensteinInt::new(x.norm(), 0));
    }

    #[test]
    fn units_are_exactly_norm_one() {
        let units = EisensteinInt::units();
        for u in &units {
            assert!(u.is_unit());
            let inv = u.unit_inverse().unwrap();
            assert!((u * &inv).is_one());
        }
        // distinctness
        for (i, u) in units.iter().enumerate() {
            for v in &units[i + 1..] {
                assert_ne!(u, v);
            }
        }
        assert_eq!(e(2, 1).unit_inverse(), None);
    }

    #[test]
    fn divmod_exact_divisor() {
        // (1+2w)(-1-2w) = 3, so 3 divides exactly.
        let (q, r) = e(3, 0).divmod(&e(1, 2)).unwrap();
        assert!(r.is_zero());
        assert_eq!(&q * &e(1, 2), e(3, 0));
        assert_eq!(q, e(-1, -2));
    }

    #[test]
    fn divmod_by_unit_and_zero() {
        let x = e(17, -5);
        assert_eq!(x.divmod(&EisensteinInt::one()).unwrap(), (x.clone(), e(0, 0)));
        assert_eq!(x.divmod(&EisensteinInt::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn divmod_half_ties_round_down() {
        // 1/2 = 0.5: tie rounds toward minus infinity, so q = 0, r = 1.
        assert_eq!(e(1, 0).divmod(&e(2, 0)).unwrap(), (e(0, 0), e(1, 0)));
        // -1/2 = -0.5 rounds to -1, so r = 1 again.
        assert_eq!(e(-1, 0).divmod(&e(2, 0)).unwrap(), (e(-1, 0), e(1, 0)));
        // 3/2 = 1.5 rounds to 1.
        assert_eq!(e(3, 0).divmod(&e(2, 0)).unwrap(), (e(1, 0), e(1, 0)));
    }

    #[test]
    fn divmod_remainder_small() {
        let pairs = [(e(19, 7), e(3, -2)), (e(-40, 13), e(5, 5)), (e(0, 9), e(2, 1))];
        for (a, c) in pairs {
            let (q, r) = a.divmod(&c).unwrap();
            assert_eq!(&q * &c + &r, a);
            assert!(r.norm() < c.norm());
            // sharper bound from the rounding rule
            assert!(BigInt::from(4) * r.norm() <= BigInt::from(3) * c.norm());
        }
    }

    #[test]
    fn residue_mod_examples() {
        let x = e(23, -8);
        assert!(x.residue_mod(&EisensteinInt::one()).unwrap().is_zero());
        assert!(x.residue_mod(&x).unwrap().is_zero());
        // residue of 5 mod 2: 5/2 = 2.5 ties down to q = 2, r = 1.
        assert_eq!(e(5, 0).residue_mod(&e(2, 0)).unwrap(), e(1, 0));
    }

    #[test]
    fn residue_mod_translation_invariant() {
        let a = e(7, -11);
        let c = e(3, 2);
        let base = a.residue_mod(&c).unwrap();
        for k in [e(1, 0), e(-4, 2), e(0, -7), e(25, 25)] {
            let shifted = (&a + &(&k * &c)).residue_mod(&c).unwrap();
            assert_eq!(shifted, base);
        }
    }

    #[test]
    fn mod3_examples() {
        assert_eq!(e(-4, 5).mod3(), e(2, 2));
        assert!(EisensteinInt::zero().mod3().is_zero());
        assert!(e(-12, 300).mod3().is_zero());
        let x = e(-7, 11);
        let m = x.mod3();
        assert_eq!(m.mod3(), m);
        let diff = &x - &m;
        assert!(diff.a().mod_floor(&BigInt::from(3)).is_zero());
        assert!(diff.b().mod_floor(&BigInt::from(3)).is_zero());
    }

    #[test]
    fn unit_normalize_picks_the_sector_associate() {
        let form = e(1, 2).unit_normalize();
        assert_eq!(form.normal, e(2, 1));
        assert_eq!(form.unit, e(1, 1)); // -w^2
        assert_eq!(&form.unit * &form.normal, e(1, 2));

        assert_eq!(
            e(5, 0).unit_normalize(),
            UnitNormalForm { unit: e(1, 0), normal: e(5, 0) }
        );
        assert_eq!(
            EisensteinInt::zero().unit_normalize(),
            UnitNormalForm { unit: e(1, 0), normal: e(0, 0) }
        );
    }

    #[test]
    fn exactly_one_associate_is_unit_normal() {
        for x in [e(1, 2), e(-3, -6), e(4, 4), e(0, -9), e(17, 5)] {
            let hits = EisensteinInt::units()
                .iter()
                .filter(|u| (*u * &x).is_unit_normal())
                .count();
            assert_eq!(hits, 1, "element {} should have one sector associate", x);
        }
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&e(3, 0), &e(1, 2)), e(2, 1));
        assert_eq!(gcd(&e(-5, -10), &e(0, 0)), e(-5, -10).unit_normalize().normal);
        assert_eq!(gcd(&e(0, -1), &e(14, 3)), e(1, 0));
        assert!(gcd(&e(0, 0), &e(0, 0)).is_zero());
        // symmetric and unit-insensitive
        assert_eq!(gcd(&e(1, 2), &e(3, 0)), e(2, 1));
        assert_eq!(gcd(&e(-3, 0), &e(1, 2)), e(2, 1));
    }

    #[test]
    fn extended_gcd_examples() {
        let (g, x, y) = extended_gcd(&e(1, 0), &e(0, 0));
        assert_eq!((g, x, y), (e(1, 0), e(1, 0), e(0, 0)));

        let (g, x, y) = extended_gcd(&e(2, 0), &e(3, 0));
        assert_eq!(g, e(1, 0));
        assert_eq!(&x * &e(2, 0) + &y * &e(3, 0), e(1, 0));
        assert_eq!((x, y), (e(-1, 0), e(1, 0)));

        let a = e(-4, 7);
        let (g, x, y) = extended_gcd(&a, &a);
        assert_eq!(g, a.unit_normalize().normal);
        assert_eq!(&x * &a + &y * &a, g);

        let (g, x, y) = extended_gcd(&e(12, -9), &e(7, 22));
        assert!(g.is_unit_normal());
        assert_eq!(&x * &e(12, -9) + &y * &e(7, 22), g);
    }

    #[test]
    fn gcd_matches_small_brute_force() {
        // Independent oracle: the maximal-norm common divisor, searched over
        // every candidate of norm up to min(norm(a), norm(b)).
        let divides = |d: &EisensteinInt, x: &EisensteinInt| -> bool {
            let n = x * &d.conj();
            let nd = d.norm();
            n.a().mod_floor(&nd).is_zero() && n.b().mod_floor(&nd).is_zero()
        };
        let cases = [
            (e(3, 0), e(1, 2)),
            (e(4, 2), e(6, 0)),
            (e(-6, 3), e(3, -3)),
            (e(5, 1), e(2, 3)),
        ];
        for (a, b) in cases {
            let bound = a.norm().min(b.norm());
            let mut best: Option<EisensteinInt> = None;
            for p in -8i64..=8 {
                for q in -8i64..=8 {
                    let d = e(p, q);
                    if d.is_zero() || d.norm() > bound {
                        continue;
                    }
                    if divides(&d, &a) && divides(&d, &b) {
                        match &best {
                            Some(cur) if cur.norm() >= d.norm() => {}
                            _ => best = Some(d),
                        }
                    }
                }
            }
            let expected = best.unwrap().unit_normalize().normal;
            assert_eq!(gcd(&a, &b), expected, "gcd({}, {})", a, b);
        }
    }

    #[test]
    fn parse_and_format_roundtrip() {
        for (text, value) in [
            ("4+0*w", e(4, 0)),
            ("-3+6*w", e(-3, 6)),
            ("3-6*w", e(3, -6)),
            ("0+0*w", e(0, 0)),
            ("-1-1*w", e(-1, -1)),
        ] {
            assert_eq!(text.parse::<EisensteinInt>().unwrap(), value);
            assert_eq!(value.to_string(), text);
        }
    }

    #[test]
    fn parse_accepts_short_forms() {
        for (text, value) in [
            ("7", e(7, 0)),
            ("-7", e(-7, 0)),
            ("w", e(0, 1)),
            ("-w", e(0, -1)),
            ("2*w", e(0, 2)),
            ("-15*w", e(0, -15)),
            ("+3", e(3, 0)),
            (" 1 - 2*w ", e(1, -2)),
            ("123456789012345678901234567890", EisensteinInt::new("123456789012345678901234567890".parse::<BigInt>().unwrap(), 0)),
        ] {
            assert_eq!(text.parse::<EisensteinInt>().unwrap(), value, "input {:?}", text);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        for text in ["", "x", "3+", "1+2", "w+w", "2**w", "*w", "1+2*w+3*w", "--4", "3w+", "1.5"] {
            assert!(text.parse::<EisensteinInt>().is_err(), "should reject {:?}", text);
        }
    }

    #[test]
    fn serde_uses_element_strings() {
        let x = e(-3, 6);
        assert_eq!(serde_json::to_string(&x).unwrap(), "\"-3+6*w\"");
        let back: EisensteinInt = serde_json::from_str("\"-3+6*w\"").unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<EisensteinInt>("\"nope\"").is_err());
    }
}
