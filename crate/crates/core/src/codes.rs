//! Ternary cyclic codes of length `3^m - 1` defined by zero exponents.

use serde::{Deserialize, Serialize};

use crate::cosets::{coset, Coset};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::polyf3::{Trit, TritPoly};

/// Minimal polynomial of `α^i` over F_3: the product of `X - α^(i·3^r)`
/// over the Frobenius orbit.
pub fn minimal_poly(ctx: &FieldCtx, i: u64) -> Result<TritPoly> {
    let root = ctx.pow(ctx.alpha(), i % ctx.n());
    // Coefficients over GF(3^m), little-endian.
    let mut acc: Vec<FieldElem> = vec![ctx.one()];
    let mut r = root;
    loop {
        let mut next = vec![ctx.zero(); acc.len() + 1];
        for (j, &c) in acc.iter().enumerate() {
            next[j + 1] = ctx.add(next[j + 1], c);
            next[j] = ctx.sub(next[j], ctx.mul(c, r));
        }
        acc = next;
        r = ctx.frobenius(r, 1);
        if r == root {
            break;
        }
    }
    let coeffs = acc
        .into_iter()
        .map(|c| {
            c.as_trit().ok_or_else(|| {
                Error::Precondition("minimal polynomial coefficient outside F_3".into())
            })
        })
        .collect::<Result<Vec<Trit>>>()?;
    Ok(TritPoly::from_coeffs(coeffs))
}

/// Evaluates an F_3 polynomial at a field element.
pub fn eval_at(ctx: &FieldCtx, p: &TritPoly, x: FieldElem) -> FieldElem {
    let Some(d) = p.degree() else {
        return ctx.zero();
    };
    let mut acc = ctx.zero();
    for i in (0..=d).rev() {
        acc = ctx.add(ctx.mul(acc, x), ctx.scale(p.coeff(i), ctx.one()));
    }
    acc
}

#[derive(Clone, Debug)]
pub struct CyclicCode {
    ctx: FieldCtx,
    zeros: Vec<u64>,
    cosets: Vec<Coset>,
    generator: TritPoly,
    collapsed: bool,
}

/// Serializable parameters of a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub modulus: TritPoly,
    pub n: u64,
    pub k: u64,
    pub zeros: Vec<u64>,
    pub generator: TritPoly,
    pub coset_leaders: Vec<u64>,
    pub coset_sizes: Vec<u32>,
    /// Some zeros shared a cyclotomic coset and were merged.
    pub collapsed: bool,
}

/// Cyclic code whose generator is the product of the minimal polynomials of
/// `α^i` over the distinct cosets of the given zeros.
pub fn build_code(ctx: &FieldCtx, zeros: &[u64]) -> Result<CyclicCode> {
    if zeros.is_empty() {
        return Err(Error::InvalidArgument("a code needs at least one zero".into()));
    }
    let n = ctx.n();
    if let Some(z) = zeros.iter().find(|&&z| z >= n) {
        return Err(Error::InvalidArgument(format!(
            "zero exponent {z} is not below n = {n}"
        )));
    }
    let mut sorted = zeros.to_vec();
    sorted.sort_unstable();
    sorted.dedup();

    let mut cosets: Vec<Coset> = Vec::new();
    let mut collapsed = sorted.len() != zeros.len();
    for &z in &sorted {
        let c = coset(z, ctx.m());
        if cosets.iter().any(|o| o.leader == c.leader) {
            collapsed = true;
        } else {
            cosets.push(c);
        }
    }
    cosets.sort_by_key(|c| c.leader);

    let mut generator = TritPoly::one();
    for c in &cosets {
        generator = &generator * &minimal_poly(ctx, c.leader)?;
    }
    Ok(CyclicCode {
        ctx: ctx.clone(),
        zeros: sorted,
        cosets,
        generator,
        collapsed,
    })
}

impl CyclicCode {
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn n(&self) -> u64 {
        self.ctx.n()
    }

    pub fn k(&self) -> u64 {
        self.n() - self.generator.degree().unwrap_or(0) as u64
    }

    /// Distinct zero exponents, ascending.
    pub fn zeros(&self) -> &[u64] {
        &self.zeros
    }

    pub fn generator(&self) -> &TritPoly {
        &self.generator
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    pub fn collapsed(&self) -> bool {
        self.collapsed
    }

    /// True iff `poly` vanishes at `α^i` for every zero exponent `i`.
    pub fn is_codeword(&self, poly: &TritPoly) -> bool {
        let a = self.ctx.alpha();
        self.zeros
            .iter()
            .all(|&i| eval_at(&self.ctx, poly, self.ctx.pow(a, i)).is_zero())
    }

    pub fn summary(&self) -> CodeSummary {
        CodeSummary {
            modulus: self.ctx.modulus().clone(),
            n: self.n(),
            k: self.k(),
            zeros: self.zeros.clone(),
            generator: self.generator.clone(),
            coset_leaders: self.cosets.iter().map(|c| c.leader).collect(),
            coset_sizes: self.cosets.iter().map(|c| c.size()).collect(),
            collapsed: self.collapsed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ctx(modulus: &str) -> FieldCtx {
        FieldCtx::new(&modulus.parse().unwrap()).unwrap()
    }

    #[test]
    fn minimal_polynomials() {
        let c = ctx("x^4+2x^3+2");
        assert_eq!(minimal_poly(&c, 0).unwrap().to_string(), "x+2");
        let m1 = minimal_poly(&c, 1).unwrap();
        assert_eq!(&m1, c.modulus());
        let x80 = TritPoly::x_n_minus_one(80);
        assert!(x80.rem(&m1).unwrap().is_zero());
        let prod = &(&minimal_poly(&c, 0).unwrap() * &m1) * &minimal_poly(&c, 50).unwrap();
        assert_eq!(prod.to_string(), "x^7+2x^6+x^5+x^3+2x+2");
    }

    #[test]
    fn worked_example_generators() {
        let c4 = ctx("x^4+2x^3+2");
        let code = build_code(&c4, &[0, 1, 50]).unwrap();
        assert_eq!((code.n(), code.k()), (80, 73));

        let c6 = ctx("x^6+2x^4+x^2+2x+2");
        let code = build_code(&c6, &[1, 336, 364]).unwrap();
        assert_eq!(
            code.generator().to_string(),
            "x^10+2x^9+2x^6+2x^5+2x^4+2x^3+2x^2+2x+1"
        );
        assert_eq!((code.n(), code.k()), (728, 718));

        let code = build_code(&c6, &[2, 29]).unwrap();
        assert_eq!(code.generator().to_string(), "x^12+2x^11+x^10+2x^6+2x^3+2");
        assert_eq!((code.n(), code.k()), (728, 716));
    }

    #[test]
    fn duplicate_cosets_collapse() {
        let c = FieldCtx::default_for(4).unwrap();
        let a = build_code(&c, &[1, 3, 50]).unwrap();
        let b = build_code(&c, &[1, 50]).unwrap();
        assert!(a.collapsed());
        assert!(!b.collapsed());
        assert_eq!(a.generator(), b.generator());
        assert!(build_code(&c, &[]).is_err());
        assert!(build_code(&c, &[80]).is_err());
    }

    #[test]
    fn divisibility_dimension_and_shift_closure() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for m in 2..=6u32 {
            let c = FieldCtx::default_for(m).unwrap();
            let n = c.n();
            let xn = TritPoly::x_n_minus_one(n as usize);
            for _ in 0..4 {
                let zeros: Vec<u64> = (0..rng.gen_range(1..4)).map(|_| rng.gen_range(0..n)).collect();
                let code = build_code(&c, &zeros).unwrap();
                let g = code.generator();
                assert!(xn.rem(g).unwrap().is_zero());
                let total: u64 = code.cosets().iter().map(|c| c.size() as u64).sum();
                assert_eq!(code.k(), n - total);
                assert!(code.is_codeword(g));
                assert!(!code.is_codeword(&TritPoly::one()));

                for _ in 0..5 {
                    let k = code.k() as usize;
                    let msg = TritPoly::from_ints(
                        &(0..k).map(|_| rng.gen_range(0..3)).collect::<Vec<i64>>(),
                    );
                    let mut w = (&msg * g).rem(&xn).unwrap();
                    for _ in 0..3 {
                        assert!(code.is_codeword(&w));
                        w = w.shl(rng.gen_range(1..n as usize)).rem(&xn).unwrap();
                    }
                }
            }
        }
    }
}
