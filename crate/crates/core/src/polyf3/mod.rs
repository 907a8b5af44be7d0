//! Polynomials over the prime field F_3.
//!
//! Coefficients are bit-sliced: trit `i` lives at bit `i % 64` of word
//! `i / 64` in one of two planes, the `ones` plane (coefficient 1) or the
//! `twos` plane (coefficient 2). A clear bit in both planes is a zero
//! coefficient. Addition of two packed words is seven boolean operations,
//! which keeps the heavy products in factorization and minimal-polynomial
//! work cheap.

mod factor;
mod text;

pub use factor::{factor, has_root_in_extension, is_irreducible, poly_order, Factorization, DEFAULT_SEED};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of F_3.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Trit(u8);

impl Trit {
    pub const ZERO: Trit = Trit(0);
    pub const ONE: Trit = Trit(1);
    pub const TWO: Trit = Trit(2);

    /// Reduces any integer into F_3.
    pub fn new(v: i64) -> Trit {
        Trit(v.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse; every nonzero trit is its own inverse.
    pub fn inv(self) -> Option<Trit> {
        if self.0 == 0 {
            None
        } else {
            Some(self)
        }
    }

    /// Signed representative in {-1, 0, 1}.
    pub fn signed(self) -> i8 {
        match self.0 {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }
}

impl TryFrom<u8> for Trit {
    type Error = String;
    fn try_from(v: u8) -> std::result::Result<Self, String> {
        if v < 3 {
            Ok(Trit(v))
        } else {
            Err(format!("trit out of range: {v}"))
        }
    }
}

impl From<Trit> for u8 {
    fn from(t: Trit) -> u8 {
        t.0
    }
}

impl Add for Trit {
    type Output = Trit;
    fn add(self, rhs: Trit) -> Trit {
        Trit((self.0 + rhs.0) % 3)
    }
}

impl Sub for Trit {
    type Output = Trit;
    fn sub(self, rhs: Trit) -> Trit {
        Trit((self.0 + 3 - rhs.0) % 3)
    }
}

impl Mul for Trit {
    type Output = Trit;
    fn mul(self, rhs: Trit) -> Trit {
        Trit((self.0 * rhs.0) % 3)
    }
}

impl Neg for Trit {
    type Output = Trit;
    fn neg(self) -> Trit {
        Trit((3 - self.0) % 3)
    }
}

impl fmt::Display for Trit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Bit-sliced F_3 addition of two packed words.
#[inline(always)]
pub(crate) fn add_packed(a1: u64, a2: u64, b1: u64, b2: u64) -> (u64, u64) {
    let t = (a1 | b2) ^ (a2 | b1);
    ((a2 | b2) ^ t, (a1 | b1) ^ t)
}

/// A polynomial in F_3[x], kept in canonical form (no trailing zero words,
/// so structural equality is polynomial equality).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TritPoly {
    ones: Vec<u64>,
    twos: Vec<u64>,
}

impl TritPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Trit::ONE)
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(Trit::ONE, 1)
    }

    pub fn constant(c: Trit) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * x^k`.
    pub fn monomial(c: Trit, k: usize) -> Self {
        let mut p = Self::zero();
        p.set_coeff(k, c);
        p
    }

    /// Builds a polynomial from little-endian coefficients (index `i` is the
    /// coefficient of `x^i`).
    pub fn from_coeffs<I: IntoIterator<Item = Trit>>(coeffs: I) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                p.set_coeff(i, c);
            }
        }
        p
    }

    /// Little-endian coefficients given as small integers, reduced mod 3.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Trit::new(c)))
    }

    /// Little-endian coefficient list up to the degree; empty for zero.
    pub fn coeffs(&self) -> Vec<Trit> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.coeff(i)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.ones.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.ones.len() == 1 && self.ones[0] == 1 && self.twos[0] == 0
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = self.ones.len().checked_sub(1)?;
        let w = self.ones[top] | self.twos[top];
        Some(top * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> Trit {
        let (w, b) = (i / 64, i % 64);
        if w >= self.ones.len() {
            return Trit::ZERO;
        }
        if (self.ones[w] >> b) & 1 == 1 {
            Trit::ONE
        } else if (self.twos[w] >> b) & 1 == 1 {
            Trit::TWO
        } else {
            Trit::ZERO
        }
    }

    pub fn leading_coeff(&self) -> Trit {
        self.degree().map_or(Trit::ZERO, |d| self.coeff(d))
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.ones
            .iter()
            .zip(&self.twos)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn set_coeff(&mut self, i: usize, c: Trit) {
        let (w, b) = (i / 64, i % 64);
        if w >= self.ones.len() {
            if c.is_zero() {
                return;
            }
            self.ones.resize(w + 1, 0);
            self.twos.resize(w + 1, 0);
        }
        let mask = 1u64 << b;
        self.ones[w] &= !mask;
        self.twos[w] &= !mask;
        match c.value() {
            1 => self.ones[w] |= mask,
            2 => self.twos[w] |= mask,
            _ => {}
        }
        self.trim();
    }

    fn trim(&mut self) {
        while let (Some(&a), Some(&b)) = (self.ones.last(), self.twos.last()) {
            if a | b != 0 {
                break;
            }
            self.ones.pop();
            self.twos.pop();
        }
    }

    /// `self += c * x^shift * other`, in place.
    pub fn add_scaled_shifted(&mut self, other: &TritPoly, shift: usize, c: Trit) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let (o1, o2) = if c == Trit::ONE {
            (&other.ones, &other.twos)
        } else {
            (&other.twos, &other.ones)
        };
        let (ws, bs) = (shift / 64, shift % 64);
        let need = ws + o1.len() + 1;
        if self.ones.len() < need {
            self.ones.resize(need, 0);
            self.twos.resize(need, 0);
        }
        let mut carry1 = 0u64;
        let mut carry2 = 0u64;
        for w in 0..=o1.len() {
            let (w1, w2) = if w < o1.len() { (o1[w], o2[w]) } else { (0, 0) };
            let (s1, s2) = if bs == 0 {
                (w1, w2)
            } else {
                let s = ((w1 << bs) | carry1, (w2 << bs) | carry2);
                carry1 = w1 >> (64 - bs);
                carry2 = w2 >> (64 - bs);
                s
            };
            let idx = ws + w;
            let (r1, r2) = add_packed(self.ones[idx], self.twos[idx], s1, s2);
            self.ones[idx] = r1;
            self.twos[idx] = r2;
        }
        self.trim();
    }

    /// Multiplies by `x^k`.
    pub fn shl(&self, k: usize) -> TritPoly {
        let mut r = TritPoly::zero();
        r.add_scaled_shifted(self, k, Trit::ONE);
        r
    }

    pub fn scale(&self, c: Trit) -> TritPoly {
        match c.value() {
            0 => TritPoly::zero(),
            1 => self.clone(),
            _ => -self,
        }
    }

    /// Scales to a monic polynomial; zero stays zero.
    pub fn monic(&self) -> TritPoly {
        self.scale(self.leading_coeff())
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Trit::ONE
    }

    /// Evaluates at a point of F_3.
    pub fn eval(&self, at: Trit) -> Trit {
        let mut acc = Trit::ZERO;
        for c in self.coeffs().into_iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn derivative(&self) -> TritPoly {
        let mut r = TritPoly::zero();
        if let Some(d) = self.degree() {
            for i in 1..=d {
                let c = self.coeff(i) * Trit::new(i as i64);
                if !c.is_zero() {
                    r.set_coeff(i - 1, c);
                }
            }
        }
        r
    }

    /// For `f(x) = g(x^3)` returns `g`, the cube root of `f` (Frobenius is
    /// the identity on F_3). Coefficients off multiples of 3 are ignored.
    pub fn cube_root(&self) -> TritPoly {
        let mut r = TritPoly::zero();
        if let Some(d) = self.degree() {
            for i in (0..=d).step_by(3) {
                r.set_coeff(i / 3, self.coeff(i));
            }
        }
        r
    }

    pub fn div_rem(&self, divisor: &TritPoly) -> Result<(TritPoly, TritPoly)> {
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv = divisor.leading_coeff();
        let mut q = TritPoly::zero();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let c = r.coeff(dr) * inv;
            q.set_coeff(dr - db, c);
            r.add_scaled_shifted(divisor, dr - db, -c);
        }
        Ok((q, r))
    }

    pub fn rem(&self, divisor: &TritPoly) -> Result<TritPoly> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &TritPoly) -> Result<TritPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn mul_mod(&self, other: &TritPoly, modulus: &TritPoly) -> Result<TritPoly> {
        (self * other).rem(modulus)
    }

    /// `self^exp mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, exp: u128, modulus: &TritPoly) -> Result<TritPoly> {
        let mut base = self.rem(modulus)?;
        let mut acc = TritPoly::one().rem(modulus)?;
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, modulus)?;
            }
        }
        Ok(acc)
    }

    /// `self^3 mod modulus`.
    pub fn cube_mod(&self, modulus: &TritPoly) -> Result<TritPoly> {
        let sq = self.mul_mod(self, modulus)?;
        sq.mul_mod(self, modulus)
    }

    pub fn pow(&self, exp: u32) -> TritPoly {
        let mut acc = TritPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(n: usize) -> TritPoly {
        let mut p = TritPoly::monomial(Trit::ONE, n);
        p.set_coeff(0, p.coeff(0) - Trit::ONE);
        p
    }

    /// Composition `self(inner(x))`.
    pub fn compose(&self, inner: &TritPoly) -> TritPoly {
        let mut acc = TritPoly::zero();
        for c in self.coeffs().into_iter().rev() {
            acc = &acc * inner;
            acc.add_scaled_shifted(&TritPoly::one(), 0, c);
        }
        acc
    }
}

impl Add for &TritPoly {
    type Output = TritPoly;
    fn add(self, rhs: &TritPoly) -> TritPoly {
        let mut r = self.clone();
        r.add_scaled_shifted(rhs, 0, Trit::ONE);
        r
    }
}

impl Sub for &TritPoly {
    type Output = TritPoly;
    fn sub(self, rhs: &TritPoly) -> TritPoly {
        let mut r = self.clone();
        r.add_scaled_shifted(rhs, 0, Trit::TWO);
        r
    }
}

impl Neg for &TritPoly {
    type Output = TritPoly;
    fn neg(self) -> TritPoly {
        TritPoly {
            ones: self.twos.clone(),
            twos: self.ones.clone(),
        }
    }
}

impl Mul for &TritPoly {
    type Output = TritPoly;
    fn mul(self, rhs: &TritPoly) -> TritPoly {
        // Iterate over the sparser operand.
        let (a, b) = if self.weight() <= rhs.weight() {
            (rhs, self)
        } else {
            (self, rhs)
        };
        let mut r = TritPoly::zero();
        for (w, (&p1, &p2)) in b.ones.iter().zip(&b.twos).enumerate() {
            for (plane, c) in [(p1, Trit::ONE), (p2, Trit::TWO)] {
                let mut bits = plane;
                while bits != 0 {
                    let j = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    r.add_scaled_shifted(a, w * 64 + j, c);
                }
            }
        }
        r
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TritPoly {
            type Output = TritPoly;
            fn $m(self, rhs: TritPoly) -> TritPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for TritPoly {
    type Output = TritPoly;
    fn neg(self) -> TritPoly {
        -&self
    }
}

impl fmt::Debug for TritPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TritPoly({self})")
    }
}

/// Free-function forms of the ring operations.
pub fn poly_add(a: &TritPoly, b: &TritPoly) -> TritPoly {
    a + b
}

pub fn poly_mul(a: &TritPoly, b: &TritPoly) -> TritPoly {
    a * b
}

pub fn poly_divrem(a: &TritPoly, b: &TritPoly) -> Result<(TritPoly, TritPoly)> {
    a.div_rem(b)
}

pub fn poly_gcd(a: &TritPoly, b: &TritPoly) -> Result<TritPoly> {
    a.gcd(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> TritPoly {
        s.parse().unwrap()
    }

    #[test]
    fn packed_addition_table() {
        for a in 0..3u8 {
            for b in 0..3u8 {
                let enc = |v: u8| ((v == 1) as u64, (v == 2) as u64);
                let (a1, a2) = enc(a);
                let (b1, b2) = enc(b);
                assert_eq!(add_packed(a1, a2, b1, b2), enc((a + b) % 3), "{a}+{b}");
            }
        }
    }

    #[test]
    fn addition_examples() {
        assert!(poly_add(&p("x+1"), &p("2x+2")).is_zero());
        assert_eq!(poly_add(&p("x^2+1"), &p("x+1")), p("x^2+x+2"));
        assert_eq!(poly_add(&TritPoly::zero(), &p("x^5+2x")), p("x^5+2x"));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(poly_mul(&p("x-1"), &p("x+1")), p("x^2+2"));
        // (x+2)(x^2+1) = x^3 + 2x^2 + x + 2, schoolbook by hand
        assert_eq!(poly_mul(&p("x+2"), &p("x^2+1")), p("x^3+2x^2+x+2"));
        assert_eq!(poly_mul(&p("x^70+x^3+2"), &TritPoly::one()), p("x^70+x^3+2"));
    }

    #[test]
    fn division_examples() {
        assert_eq!(poly_divrem(&p("x^2+2"), &p("x+1")).unwrap(), (p("x+2"), TritPoly::zero()));
        let (_, r) = poly_divrem(&TritPoly::x_n_minus_one(8), &p("x^2+x+2")).unwrap();
        assert!(r.is_zero());
        let q = p("2x^9+x^4+1");
        assert_eq!(poly_divrem(&q, &q).unwrap(), (TritPoly::one(), TritPoly::zero()));
        assert_eq!(poly_divrem(&q, &TritPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(poly_gcd(&p("x^2+2"), &p("x+1")).unwrap(), p("x+1"));
        assert_eq!(poly_gcd(&p("2x^3+x"), &TritPoly::zero()).unwrap(), p("x^3+2x"));
        let a = p("x-1").pow(2) * p("x+1");
        let b = p("x-1") * p("x^2+1");
        assert_eq!(poly_gcd(&a, &b).unwrap(), p("x+2"));
        assert_eq!(poly_gcd(&TritPoly::zero(), &TritPoly::zero()), Err(Error::GcdOfZeros));
    }

    #[test]
    fn degree_and_canonical_form() {
        assert_eq!(TritPoly::zero().degree(), None);
        assert_eq!(TritPoly::one().degree(), Some(0));
        let mut q = TritPoly::monomial(Trit::TWO, 130);
        assert_eq!(q.degree(), Some(130));
        q.set_coeff(130, Trit::ZERO);
        assert_eq!(q, TritPoly::zero());
    }

    #[test]
    fn derivative_and_cube_root() {
        assert_eq!(p("x^4+x^3+2x").derivative(), p("x^3+2"));
        let g = p("x^2+2x+1");
        let g3 = g.compose(&p("x^3"));
        assert!(g3.derivative().is_zero());
        assert_eq!(g3.cube_root(), g);
    }

    #[test]
    fn long_shifts_cross_word_boundaries() {
        let a = p("x^63+x^62+2");
        let b = p("x^65+2x");
        let prod = &a * &b;
        assert_eq!(prod, p("x^128+x^127+2x^65+2x^64+2x^63+x"));
        let (q, r) = prod.div_rem(&b).unwrap();
        assert_eq!((q, r), (a, TritPoly::zero()));
    }
}
