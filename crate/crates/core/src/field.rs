//! Concrete finite fields GF(3^m) defined by a primitive polynomial.
//!
//! Elements are polynomial-basis coordinates packed like [`TritPoly`]
//! words: one `u64` plane for coefficient 1 and one for coefficient 2, so
//! `m <= 40` coordinates fit in a single word pair. The class of `x` is the
//! primitive element `α`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::polyf3::{add_packed, is_irreducible, poly_order, Trit, TritPoly};

/// Largest extension degree for which `3^m - 1` fits in a `u64`.
pub const MAX_DEGREE: u32 = 40;

/// Default cap on the extension degree of exhaustive scans (3^13 ≈ 1.6M).
pub const DEFAULT_EXHAUSTIVE_CAP: u32 = 13;

/// Base-3 value of each byte read as a 0/1 digit string.
const TRI: [u64; 256] = {
    let mut t = [0u64; 256];
    let mut b = 0;
    while b < 256 {
        let mut v = 0u64;
        let mut p = 1u64;
        let mut i = 0;
        while i < 8 {
            if (b >> i) & 1 == 1 {
                v += p;
            }
            p *= 3;
            i += 1;
        }
        t[b] = v;
        b += 1;
    }
    t
};

/// An element of GF(3^m) in polynomial-basis coordinates.
///
/// Serializes as its dense index (coordinates read as a base-3 number).
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(into = "u64", from = "u64")]
pub struct FieldElem {
    ones: u64,
    twos: u64,
}

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem { ones: 0, twos: 0 };
    pub const ONE: FieldElem = FieldElem { ones: 1, twos: 0 };

    pub fn from_trit(t: Trit) -> FieldElem {
        match t.value() {
            0 => FieldElem::ZERO,
            1 => FieldElem::ONE,
            _ => FieldElem { ones: 0, twos: 1 },
        }
    }

    pub fn is_zero(self) -> bool {
        self.ones | self.twos == 0
    }

    /// The element as a trit when it lies in the prime field F_3.
    pub fn as_trit(self) -> Option<Trit> {
        if (self.ones | self.twos) >> 1 != 0 {
            return None;
        }
        Some(if self.ones == 1 {
            Trit::ONE
        } else if self.twos == 1 {
            Trit::TWO
        } else {
            Trit::ZERO
        })
    }

    /// Coordinates read as a base-3 number, constant term least
    /// significant.
    #[inline]
    pub fn index(self) -> u64 {
        let (mut o, mut t) = (self.ones, self.twos);
        let (mut idx, mut mul) = (0u64, 1u64);
        while o | t != 0 {
            idx += (TRI[(o & 0xff) as usize] + 2 * TRI[(t & 0xff) as usize]) * mul;
            mul = mul.wrapping_mul(6561);
            o >>= 8;
            t >>= 8;
        }
        idx
    }

    pub fn from_index(mut idx: u64) -> FieldElem {
        let mut e = FieldElem::ZERO;
        let mut i = 0;
        while idx > 0 {
            match idx % 3 {
                1 => e.ones |= 1 << i,
                2 => e.twos |= 1 << i,
                _ => {}
            }
            idx /= 3;
            i += 1;
        }
        e
    }

    pub fn coord(self, i: u32) -> Trit {
        if (self.ones >> i) & 1 == 1 {
            Trit::ONE
        } else if (self.twos >> i) & 1 == 1 {
            Trit::TWO
        } else {
            Trit::ZERO
        }
    }

    #[inline(always)]
    fn add(self, o: FieldElem) -> FieldElem {
        let (ones, twos) = add_packed(self.ones, self.twos, o.ones, o.twos);
        FieldElem { ones, twos }
    }

    #[inline(always)]
    fn neg(self) -> FieldElem {
        FieldElem {
            ones: self.twos,
            twos: self.ones,
        }
    }
}

/// GF(3^m) with a fixed primitive modulus.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldCtx {
    m: u32,
    n: u64,
    modulus: TritPoly,
    // x^m mod modulus, packed.
    red: FieldElem,
    mask: u64,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(3^{}) mod {}", self.m, self.modulus)
    }
}

impl FieldCtx {
    /// Builds the field `F_3[x]/(modulus)`; the modulus must be monic,
    /// irreducible and primitive.
    pub fn new(modulus: &TritPoly) -> Result<FieldCtx> {
        let m = modulus.degree().ok_or(Error::ConstantPolynomial)? as u32;
        if m == 0 || m > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange(m));
        }
        if !modulus.is_monic() {
            return Err(Error::NotMonic);
        }
        if !is_irreducible(modulus)? {
            return Err(Error::NotIrreducible);
        }
        let ctx = Self::new_unchecked(modulus.clone());
        let order = poly_order(modulus)?;
        if order != ctx.n {
            return Err(Error::NotPrimitive {
                order,
                expected: ctx.n,
            });
        }
        Ok(ctx)
    }

    fn new_unchecked(modulus: TritPoly) -> FieldCtx {
        let m = modulus.degree().unwrap() as u32;
        let n = arith::pow3(m) - 1;
        let mask = (1u64 << m) - 1;
        let low = &modulus - &TritPoly::monomial(Trit::ONE, m as usize);
        let mut ctx = FieldCtx {
            m,
            n,
            modulus,
            red: FieldElem::ZERO,
            mask,
        };
        ctx.red = ctx.from_poly_low(&-&low);
        ctx
    }

    /// The default field of degree `m`: the lexicographically smallest
    /// monic primitive polynomial, comparing coefficients from the constant
    /// term upwards.
    pub fn default_for(m: u32) -> Result<FieldCtx> {
        if m == 0 || m > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange(m));
        }
        let mut digits = vec![0u8; m as usize];
        // The constant term of a primitive polynomial is (-1)^m times the
        // norm of α, and a generator has norm -1. Other constant terms can
        // be skipped without changing the lexicographic minimum.
        digits[0] = if m % 2 == 1 { 1 } else { 2 };
        loop {
            // digits[0] is the constant term and the most significant digit.
            let mut coeffs: Vec<Trit> = digits.iter().map(|&d| Trit::new(d as i64)).collect();
            coeffs.push(Trit::ONE);
            let cand = TritPoly::from_coeffs(coeffs);
            if is_irreducible(&cand)? {
                if let Ok(order) = poly_order(&cand) {
                    if order == arith::pow3(m) - 1 {
                        return Ok(Self::new_unchecked(cand));
                    }
                }
            }
            let mut i = m as usize;
            loop {
                if i == 0 {
                    unreachable!("every degree has a primitive polynomial");
                }
                i -= 1;
                if digits[i] < 2 {
                    digits[i] += 1;
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Order of the multiplicative group, `3^m - 1`.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Number of field elements, `3^m`.
    pub fn size(&self) -> u64 {
        self.n + 1
    }

    pub fn modulus(&self) -> &TritPoly {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::ONE
    }

    /// The primitive element, the class of `x`.
    pub fn alpha(&self) -> FieldElem {
        self.from_poly(&TritPoly::x())
    }

    fn from_poly_low(&self, p: &TritPoly) -> FieldElem {
        let mut e = FieldElem::ZERO;
        for (i, c) in p.coeffs().into_iter().enumerate() {
            match c.value() {
                1 => e.ones |= 1 << i,
                2 => e.twos |= 1 << i,
                _ => {}
            }
        }
        e
    }

    /// Reduces a polynomial modulo the field modulus.
    pub fn from_poly(&self, p: &TritPoly) -> FieldElem {
        let r = p.rem(&self.modulus).expect("modulus is nonzero");
        self.from_poly_low(&r)
    }

    pub fn to_poly(&self, e: FieldElem) -> TritPoly {
        TritPoly::from_coeffs(self.coords(e))
    }

    /// Little-endian coordinates, always `m` of them.
    pub fn coords(&self, e: FieldElem) -> Vec<Trit> {
        (0..self.m).map(|i| e.coord(i)).collect()
    }

    pub fn from_coords(&self, coords: &[Trit]) -> Result<FieldElem> {
        if coords.len() > self.m as usize {
            return Err(Error::InvalidArgument(format!(
                "{} coordinates for a degree-{} field",
                coords.len(),
                self.m
            )));
        }
        Ok(self.from_poly_low(&TritPoly::from_coeffs(coords.iter().copied())))
    }

    #[inline(always)]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        a.add(b)
    }

    #[inline(always)]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        a.add(b.neg())
    }

    #[inline(always)]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        a.neg()
    }

    pub fn scale(&self, c: Trit, a: FieldElem) -> FieldElem {
        match c.value() {
            0 => FieldElem::ZERO,
            1 => a,
            _ => a.neg(),
        }
    }

    #[inline(always)]
    fn mul_x(&self, a: FieldElem) -> FieldElem {
        let s1 = a.ones << 1;
        let s2 = a.twos << 1;
        let t1 = ((s1 >> self.m) & 1).wrapping_neg();
        let t2 = ((s2 >> self.m) & 1).wrapping_neg();
        let r1 = (self.red.ones & t1) | (self.red.twos & t2);
        let r2 = (self.red.twos & t1) | (self.red.ones & t2);
        let (ones, twos) = add_packed(s1 & self.mask, s2 & self.mask, r1, r2);
        FieldElem { ones, twos }
    }

    /// Product by Horner's rule over the coordinates of `b`.
    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let top = 64 - (b.ones | b.twos).leading_zeros();
        let mut acc = FieldElem::ZERO;
        for i in (0..top).rev() {
            acc = self.mul_x(acc);
            let b1 = ((b.ones >> i) & 1).wrapping_neg();
            let b2 = ((b.twos >> i) & 1).wrapping_neg();
            let sel = FieldElem {
                ones: (a.ones & b1) | (a.twos & b2),
                twos: (a.twos & b1) | (a.ones & b2),
            };
            acc = acc.add(sel);
        }
        acc
    }

    pub fn square(&self, a: FieldElem) -> FieldElem {
        self.mul(a, a)
    }

    /// `x^k` by square-and-multiply; the exponent is reduced mod `n` for
    /// nonzero `x`, and `0^0 = 1`.
    pub fn pow(&self, x: FieldElem, k: u64) -> FieldElem {
        if x.is_zero() {
            return if k == 0 { FieldElem::ONE } else { FieldElem::ZERO };
        }
        let mut e = k % self.n;
        let mut base = x;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    pub fn inv(&self, x: FieldElem) -> Result<FieldElem> {
        if x.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(x, self.n - 1))
    }

    /// `x^(3^k)`; `k` is taken modulo `m`.
    pub fn frobenius(&self, x: FieldElem, k: u32) -> FieldElem {
        let mut y = x;
        for _ in 0..k % self.m {
            y = self.mul(self.mul(y, y), y);
        }
        y
    }

    /// Quadratic character `x^((3^m - 1)/2)`, which is `1` on nonzero
    /// squares and `2 = -1` on non-squares.
    pub fn half_power(&self, x: FieldElem) -> Result<Trit> {
        if x.is_zero() {
            return Err(Error::ZeroCharacter);
        }
        let v = self.pow(x, self.n / 2);
        v.as_trit()
            .filter(|t| !t.is_zero())
            .ok_or_else(|| Error::Precondition("quadratic character escaped {1, -1}".into()))
    }

    /// Dense index of an element: its coordinates read as a base-3 number.
    pub fn index_of(&self, e: FieldElem) -> u64 {
        e.index()
    }

    /// Inverse of [`FieldCtx::index_of`] for `idx < 3^m`.
    pub fn element_at(&self, idx: u64) -> FieldElem {
        FieldElem::from_index(idx % self.size())
    }

    /// Next element in coordinate-counter order (wraps to zero).
    #[inline]
    pub fn next_element(&self, e: FieldElem) -> FieldElem {
        let carries = (!e.twos).trailing_zeros();
        if carries >= self.m {
            return FieldElem::ZERO;
        }
        let low = (1u64 << carries) - 1;
        let bit = 1u64 << carries;
        let mut r = FieldElem {
            ones: e.ones,
            twos: e.twos & !low,
        };
        if r.ones & bit != 0 {
            r.ones &= !bit;
            r.twos |= bit;
        } else {
            r.ones |= bit;
        }
        r
    }

    fn check_cap(&self, cap: u32) -> Result<()> {
        if self.m > cap {
            Err(Error::CapExceeded { m: self.m, cap })
        } else {
            Ok(())
        }
    }

    /// Every element exactly once, in coordinate-counter order.
    pub fn all_elements(&self, cap: u32) -> Result<ElementIter<'_>> {
        self.check_cap(cap)?;
        Ok(ElementIter {
            ctx: self,
            next: FieldElem::ZERO,
            remaining: self.size(),
        })
    }

    /// Parallel exhaustive scan returning the match with the smallest
    /// coordinate index, so the result does not depend on scheduling.
    pub fn scan_first<T, F>(&self, cap: u32, f: F) -> Result<Option<(FieldElem, T)>>
    where
        T: Send,
        F: Fn(FieldElem) -> Option<T> + Sync,
    {
        self.check_cap(cap)?;
        const CHUNK: u64 = 1 << 12;
        let size = self.size();
        let chunks = size.div_ceil(CHUNK);
        Ok((0..chunks).into_par_iter().find_map_first(|c| {
            let start = c * CHUNK;
            let end = (start + CHUNK).min(size);
            let mut e = self.element_at(start);
            for _ in start..end {
                if let Some(t) = f(e) {
                    return Some((e, t));
                }
                e = self.next_element(e);
            }
            None
        }))
    }

    /// Discrete logarithm by walking powers of `α`; only for `m <= 8`.
    pub fn small_log(&self, e: FieldElem) -> Option<u64> {
        if self.m > 8 || e.is_zero() {
            return None;
        }
        let alpha = self.alpha();
        let mut acc = FieldElem::ONE;
        for i in 0..self.n {
            if acc == e {
                return Some(i);
            }
            acc = self.mul(acc, alpha);
        }
        None
    }

    /// Coordinate list, plus `α^i` when the logarithm is cheap.
    pub fn describe(&self, e: FieldElem) -> String {
        let coords: Vec<String> = self.coords(e).iter().map(|t| t.to_string()).collect();
        match self.small_log(e) {
            Some(i) => format!("[{}] = α^{i}", coords.join(",")),
            None => format!("[{}]", coords.join(",")),
        }
    }
}

impl From<FieldElem> for u64 {
    fn from(e: FieldElem) -> u64 {
        e.index()
    }
}

impl From<u64> for FieldElem {
    fn from(idx: u64) -> FieldElem {
        FieldElem::from_index(idx)
    }
}

pub struct ElementIter<'a> {
    ctx: &'a FieldCtx,
    next: FieldElem,
    remaining: u64,
}

impl Iterator for ElementIter<'_> {
    type Item = FieldElem;

    fn next(&mut self) -> Option<FieldElem> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let cur = self.next;
        self.next = self.ctx.next_element(cur);
        Some(cur)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining as usize, Some(self.remaining as usize))
    }
}

/// Field specification as accepted on the command line: `m=4` or
/// `m=4,mod=x^4+2x^3+2` (or just `mod=...`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub m: Option<u32>,
    pub modulus: Option<TritPoly>,
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<FieldSpec> {
        let s = s.trim();
        let (m_part, mod_part) = match s.find("mod=") {
            Some(pos) => (s[..pos].trim_end_matches([',', ' ']), Some(&s[pos + 4..])),
            None => (s, None),
        };
        let m = if m_part.is_empty() {
            None
        } else {
            let v = m_part
                .strip_prefix("m=")
                .ok_or_else(|| Error::Parse(format!("bad field spec {s:?}")))?;
            Some(
                v.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad extension degree in {s:?}")))?,
            )
        };
        let modulus = mod_part.map(str::parse::<TritPoly>).transpose()?;
        if m.is_none() && modulus.is_none() {
            return Err(Error::Parse(format!("empty field spec {s:?}")));
        }
        Ok(FieldSpec { m, modulus })
    }

    pub fn build(&self) -> Result<FieldCtx> {
        match (&self.modulus, self.m) {
            (Some(p), m) => {
                let ctx = FieldCtx::new(p)?;
                if let Some(m) = m {
                    if m != ctx.m() {
                        return Err(Error::InvalidArgument(format!(
                            "m={m} but the modulus has degree {}",
                            ctx.m()
                        )));
                    }
                }
                Ok(ctx)
            }
            (None, Some(m)) => FieldCtx::default_for(m),
            (None, None) => Err(Error::Parse("empty field spec".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn ex1() -> FieldCtx {
        FieldCtx::new(&"x^4+2x^3+2".parse().unwrap()).unwrap()
    }

    /// Reference product through polynomial multiplication and reduction.
    fn slow_mul(ctx: &FieldCtx, a: FieldElem, b: FieldElem) -> FieldElem {
        ctx.from_poly(&(&ctx.to_poly(a) * &ctx.to_poly(b)))
    }

    #[test]
    fn construction() {
        let c = ex1();
        assert_eq!((c.m(), c.n()), (4, 80));
        let c6 = FieldCtx::new(&"x^6+2x^4+x^2+2x+2".parse().unwrap()).unwrap();
        assert_eq!((c6.m(), c6.n()), (6, 728));
        assert_eq!(
            FieldCtx::new(&"x^2+2".parse().unwrap()),
            Err(Error::NotIrreducible)
        );
        assert_eq!(
            FieldCtx::new(&"x^2+1".parse().unwrap()),
            Err(Error::NotPrimitive {
                order: 4,
                expected: 8
            })
        );
        assert_eq!(FieldCtx::new(&"2x^2+x+1".parse().unwrap()), Err(Error::NotMonic));
    }

    #[test]
    fn default_moduli() {
        let c1 = FieldCtx::default_for(1).unwrap();
        assert_eq!(c1.modulus().to_string(), "x+1");
        assert_eq!(c1.alpha(), FieldElem::from_trit(Trit::TWO));

        // Exhaustive scan of monic quadratics in the documented order.
        let mut best = None;
        'scan: for c0 in 0..3 {
            for c1 in 0..3 {
                let p = TritPoly::from_ints(&[c0, c1, 1]);
                if c0 != 0 && is_irreducible(&p).unwrap() && poly_order(&p).unwrap() == 8 {
                    best = Some(p);
                    break 'scan;
                }
            }
        }
        let c2 = FieldCtx::default_for(2).unwrap();
        assert_eq!(Some(c2.modulus().clone()), best);
        assert_eq!(c2.modulus().to_string(), "x^2+x+2");

        for m in [3, 4, 5, 13, 20] {
            let c = FieldCtx::default_for(m).unwrap();
            assert_eq!(poly_order(c.modulus()).unwrap(), c.n());
        }
        assert_eq!(FieldCtx::default_for(0), Err(Error::DegreeOutOfRange(0)));
        assert_eq!(FieldCtx::default_for(41), Err(Error::DegreeOutOfRange(41)));
    }

    #[test]
    fn multiplication_matches_polynomial_reference() {
        for m in [1u32, 2, 3, 5, 8, 13, 40] {
            let c = FieldCtx::default_for(m).unwrap();
            let mut a = c.alpha();
            let mut b = c.element_at(c.size() / 3);
            for _ in 0..200 {
                assert_eq!(c.mul(a, b), slow_mul(&c, a, b));
                a = c.add(c.mul(a, a), c.one());
                b = c.sub(c.mul(b, c.alpha()), a);
            }
        }
    }

    #[test]
    fn power_identities() {
        let c = ex1();
        let a = c.alpha();
        assert_eq!(c.pow(a, 80), c.one());
        assert_ne!(c.pow(a, 40), c.one());
        assert_ne!(c.pow(a, 16), c.one());
        for e in c.all_elements(13).unwrap().filter(|e| !e.is_zero()) {
            assert_eq!(c.pow(e, 0), c.one());
            assert_eq!(c.mul(c.inv(e).unwrap(), e), c.one());
        }
        assert_eq!(c.inv(c.zero()), Err(Error::ZeroInverse));
        assert_eq!(c.pow(c.zero(), 0), c.one());
        assert_eq!(c.pow(c.zero(), 5), c.zero());
    }

    #[test]
    fn frobenius_examples() {
        let c6 = FieldCtx::default_for(6).unwrap();
        let a = c6.alpha();
        assert_eq!(c6.frobenius(a, 0), a);
        assert_eq!(c6.frobenius(a, 6), a);
        assert_eq!(c6.frobenius(a, 3), c6.pow(a, 27));
    }

    #[test]
    fn quadratic_character() {
        let c = ex1();
        let a = c.alpha();
        assert_eq!(c.half_power(c.one()).unwrap(), Trit::ONE);
        assert_eq!(c.half_power(a).unwrap(), Trit::TWO);
        assert_eq!(c.half_power(c.mul(a, a)).unwrap(), Trit::ONE);
        assert_eq!(c.half_power(c.zero()), Err(Error::ZeroCharacter));
    }

    #[test]
    fn element_enumeration() {
        let c1 = FieldCtx::default_for(1).unwrap();
        let e1: Vec<_> = c1.all_elements(13).unwrap().map(|e| c1.index_of(e)).collect();
        assert_eq!(e1, vec![0, 1, 2]);

        let c2 = FieldCtx::default_for(2).unwrap();
        let e2: HashSet<_> = c2.all_elements(13).unwrap().collect();
        assert_eq!(e2.len(), 9);

        let c = ex1();
        let all: Vec<_> = c.all_elements(13).unwrap().collect();
        assert_eq!(all.len(), 81);
        for (i, e) in all.iter().enumerate() {
            assert_eq!(c.index_of(*e), i as u64);
            assert_eq!(c.element_at(i as u64), *e);
        }
        let nonzero: HashSet<_> = all.iter().copied().filter(|e| !e.is_zero()).collect();
        let powers: HashSet<_> = (0..80).map(|i| c.pow(c.alpha(), i)).collect();
        assert_eq!(nonzero.len(), 80);
        assert_eq!(nonzero, powers);

        let big = FieldCtx::default_for(14).unwrap();
        assert_eq!(
            big.all_elements(DEFAULT_EXHAUSTIVE_CAP).err(),
            Some(Error::CapExceeded { m: 14, cap: 13 })
        );
    }

    #[test]
    fn scan_first_returns_lowest_index() {
        let c = FieldCtx::default_for(9).unwrap();
        let hit = c
            .scan_first(13, |e| (c.index_of(e) % 5000 == 4999).then_some(()))
            .unwrap()
            .unwrap();
        assert_eq!(c.index_of(hit.0), 4999);
    }

    #[test]
    fn field_spec_parsing() {
        let s = FieldSpec::parse("m=4,mod=x^4+2x^3+2").unwrap();
        assert_eq!(s.build().unwrap(), ex1());
        let s = FieldSpec::parse("m=4,mod=2,0,0,2,1").unwrap();
        assert_eq!(s.build().unwrap(), ex1());
        let s = FieldSpec::parse("m=4").unwrap();
        assert_eq!(s.build().unwrap().m(), 4);
        assert!(FieldSpec::parse("m=5,mod=x^4+2x^3+2").unwrap().build().is_err());
        assert!(FieldSpec::parse("q=4").is_err());
    }
}
