//! Irreducibility, multiplicative order and complete factorization in F_3[x].
//!
//! Factorization runs the classical three stages: squarefree decomposition
//! (with cube roots when the derivative vanishes), distinct-degree splitting
//! with `gcd(x^(3^d) - x, f)`, and Cantor-Zassenhaus equal-degree splitting
//! driven by a seeded ChaCha stream.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Trit, TritPoly};
use crate::arith;
use crate::error::{Error, Result};

/// Default seed for equal-degree splitting.
pub const DEFAULT_SEED: u64 = 0xC0DE;

/// `unit · Π factor^multiplicity`, factors monic irreducible and sorted by
/// degree, then by coefficients from the top down.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub unit: Trit,
    pub factors: Vec<(TritPoly, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn product(&self) -> TritPoly {
        let mut acc = TritPoly::constant(self.unit);
        for (f, k) in &self.factors {
            acc = &acc * &f.pow(*k);
        }
        acc
    }

    /// `(degree, multiplicity)` pairs in factor order.
    pub fn shape(&self) -> Vec<(usize, u32)> {
        self.factors
            .iter()
            .map(|(f, k)| (f.degree().unwrap_or(0), *k))
            .collect()
    }

    pub fn multiplicity_of(&self, p: &TritPoly) -> u32 {
        self.factors
            .iter()
            .find(|(f, _)| f == p)
            .map_or(0, |(_, k)| *k)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit != Trit::ONE || self.factors.is_empty() {
            write!(f, "{}", self.unit)?;
        }
        for (p, k) in &self.factors {
            write!(f, "({p})")?;
            if *k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

fn x_pow_3k(k: usize, modulus: &TritPoly) -> Result<TritPoly> {
    let mut h = TritPoly::x().rem(modulus)?;
    for _ in 0..k {
        h = h.cube_mod(modulus)?;
    }
    Ok(h)
}

/// Whether `p` has a root in GF(3^m), i.e. `gcd(p, x^(3^m) - x) != 1`.
pub fn has_root_in_extension(p: &TritPoly, m: u32) -> Result<bool> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let h = x_pow_3k(m as usize, p)?;
    Ok(!(&h - &TritPoly::x()).gcd(p)?.is_one())
}

/// Rabin's test: `x^(3^d) ≡ x (mod p)` and `gcd(x^(3^(d/q)) - x, p) = 1`
/// for every prime `q | d`.
pub fn is_irreducible(p: &TritPoly) -> Result<bool> {
    let d = match p.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    if d == 1 {
        return Ok(true);
    }
    let p = p.monic();
    let x = TritPoly::x();
    if x_pow_3k(d, &p)? != x {
        return Ok(false);
    }
    for q in arith::prime_factors(d as u64) {
        let h = x_pow_3k(d / q as usize, &p)?;
        if !(&h - &x).gcd(&p)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Least `N` with `p | x^N - 1`, for irreducible `p` with `p(0) != 0` and
/// degree at most 40.
pub fn poly_order(p: &TritPoly) -> Result<u64> {
    let d = p.degree().ok_or(Error::ConstantPolynomial)?;
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if p.coeff(0).is_zero() {
        return Err(Error::DivisibleByX);
    }
    if !is_irreducible(p)? {
        return Err(Error::NotIrreducible);
    }
    if d > 40 {
        return Err(Error::InvalidArgument(format!(
            "order of a degree-{d} polynomial exceeds the 64-bit range"
        )));
    }
    let p = p.monic();
    let x = TritPoly::x();
    let mut ord = arith::pow3(d as u32) - 1;
    for q in arith::prime_factors(ord) {
        while ord % q == 0 && x.pow_mod((ord / q) as u128, &p)?.is_one() {
            ord /= q;
        }
    }
    Ok(ord)
}

/// Complete factorization over F_3. Deterministic for a fixed seed; the
/// output order is canonical and therefore independent of the seed.
pub fn factor(p: &TritPoly, seed: u64) -> Result<Factorization> {
    match p.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        _ => {}
    }
    let unit = p.leading_coeff();
    let monic = p.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors: Vec<(TritPoly, u32)> = Vec::new();
    for (part, mult) in squarefree(&monic)? {
        for (block, d) in distinct_degree(&part)? {
            let mut pieces = Vec::new();
            equal_degree(&block, d, &mut rng, &mut pieces)?;
            factors.extend(pieces.into_iter().map(|f| (f, mult)));
        }
    }
    factors.sort_by(|(a, _), (b, _)| canonical_key(a).cmp(&canonical_key(b)));
    Ok(Factorization { unit, factors })
}

fn canonical_key(p: &TritPoly) -> (usize, Vec<Trit>) {
    let mut c = p.coeffs();
    c.reverse();
    (p.degree().unwrap_or(0), c)
}

/// Squarefree decomposition of a monic polynomial: pairs `(part, k)` where
/// each part is squarefree, monic and coprime to the others.
fn squarefree(f: &TritPoly) -> Result<Vec<(TritPoly, u32)>> {
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative())?;
    let mut w = f.div_rem(&c)?.0;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let z = w.div_rem(&y)?.0;
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div_rem(&w)?.0;
    }
    if !c.is_one() {
        for (g, k) in squarefree(&c.cube_root())? {
            out.push((g, k * 3));
        }
    }
    Ok(out)
}

/// Splits a squarefree monic polynomial into blocks whose irreducible
/// factors all share one degree.
fn distinct_degree(f: &TritPoly) -> Result<Vec<(TritPoly, usize)>> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x = TritPoly::x();
    let mut h = x.rem(&f)?;
    let mut d = 0usize;
    while f.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.cube_mod(&f)?;
        let g = (&h - &x).gcd(&f)?;
        if !g.is_one() {
            f = f.div_rem(&g)?.0;
            h = h.rem(&f)?;
            out.push((g, d));
        }
    }
    if let Some(deg) = f.degree() {
        if deg > 0 {
            out.push((f, deg));
        }
    }
    Ok(out)
}

fn random_poly_below(deg: usize, rng: &mut ChaCha8Rng) -> TritPoly {
    TritPoly::from_coeffs((0..deg).map(|_| Trit::new(rng.gen_range(0..3))))
}

/// Cantor-Zassenhaus: `a^((3^d - 1)/2) = Π_{i<d} a^(3^i)` splits `g` with
/// probability about one half per draw.
fn equal_degree(
    g: &TritPoly,
    d: usize,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<TritPoly>,
) -> Result<()> {
    let n = g.degree().unwrap_or(0);
    if n <= d {
        out.push(g.clone());
        return Ok(());
    }
    loop {
        let a = random_poly_below(n, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let direct = a.gcd(g)?;
        let h = if !direct.is_one() {
            direct
        } else {
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = t.cube_mod(g)?;
                acc = acc.mul_mod(&t, g)?;
            }
            (&acc - &TritPoly::one()).gcd(g)?
        };
        let hd = h.degree().unwrap_or(0);
        if hd > 0 && hd < n {
            let rest = g.div_rem(&h)?.0;
            equal_degree(&h, d, rng, out)?;
            equal_degree(&rest, d, rng, out)?;
            return Ok(());
        }
    }
}
