//! Generic search for codewords of weight at most 4 in a cyclic code.
//!
//! A weight-`w` word is normalized by cyclic shift (one support position is
//! 0) and by scaling (its coefficient is 1). The remaining `w - 2` free
//! positions are enumerated in increasing order with coefficients in
//! {1, 2}; the last position is then solved for from the equation at one
//! "pivot" zero exponent through a discrete-log table, and the candidate is
//! accepted only if it vanishes at every zero.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd, mod_inv, mul_mod};
use crate::codes::CyclicCode;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::polyf3::{Trit, TritPoly};

/// Largest extension degree for which the weight-4 search is allowed.
pub const WEIGHT4_MAX_M: u32 = 6;

const COEFFS: [Trit; 2] = [Trit::ONE, Trit::TWO];

/// A nonzero codeword of low weight: `Σ c_j x^(s_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightWitness {
    pub weight: u32,
    pub support_exponents: Vec<u64>,
    pub coefficients: Vec<Trit>,
}

impl WeightWitness {
    pub fn to_poly(&self) -> TritPoly {
        let mut p = TritPoly::zero();
        for (&s, &c) in self.support_exponents.iter().zip(&self.coefficients) {
            p.add_scaled_shifted(&TritPoly::one(), s as usize, c);
        }
        p
    }
}

/// Powers of `α` and their discrete logarithms, indexed densely.
pub struct PowerTables {
    n: u64,
    antilog: Vec<FieldElem>,
    log: Vec<u32>,
}

impl PowerTables {
    pub fn new(ctx: &FieldCtx, cap: u32) -> Result<PowerTables> {
        if ctx.m() > cap {
            return Err(Error::CapExceeded { m: ctx.m(), cap });
        }
        let n = ctx.n();
        let alpha = ctx.alpha();
        let mut antilog = Vec::with_capacity(n as usize);
        let mut log = vec![u32::MAX; ctx.size() as usize];
        let mut x = ctx.one();
        for i in 0..n {
            antilog.push(x);
            log[x.index() as usize] = i as u32;
            x = ctx.mul(x, alpha);
        }
        Ok(PowerTables { n, antilog, log })
    }

    #[inline]
    pub fn alpha_pow(&self, i: u64) -> FieldElem {
        self.antilog[(i % self.n) as usize]
    }

    #[inline]
    pub fn log(&self, x: FieldElem) -> Option<u64> {
        match self.log[x.index() as usize] {
            u32::MAX => None,
            l => Some(l as u64),
        }
    }
}

struct Searcher<'a> {
    ctx: &'a FieldCtx,
    tables: &'a PowerTables,
    n: u64,
    /// Zero exponents other than the pivot.
    others: Vec<u64>,
    pivot: Option<Pivot>,
}

struct Pivot {
    exp: u64,
    g: u64,
    step: u64,
    inv: u64,
}

impl<'a> Searcher<'a> {
    fn new(code: &'a CyclicCode, tables: &'a PowerTables) -> Searcher<'a> {
        let n = code.n();
        let pivot_exp = code
            .zeros()
            .iter()
            .copied()
            .filter(|&z| z % n != 0)
            .min_by_key(|&z| (gcd(z, n), z));
        let pivot = pivot_exp.map(|exp| {
            let g = gcd(exp, n);
            let step = n / g;
            Pivot {
                exp,
                g,
                step,
                inv: mod_inv((exp / g) % step, step).unwrap_or(0),
            }
        });
        let others = code
            .zeros()
            .iter()
            .copied()
            .filter(|&z| Some(z) != pivot_exp)
            .collect();
        Searcher {
            ctx: code.ctx(),
            tables,
            n,
            others,
            pivot,
        }
    }

    #[inline]
    fn term(&self, zero: u64, pos: u64, c: Trit) -> FieldElem {
        self.ctx
            .scale(c, self.tables.alpha_pow(mul_mod(zero, pos, self.n)))
    }

    /// Positions `s` with `α^(pivot·s) = target`, ascending.
    fn solve(&self, target: FieldElem) -> Vec<u64> {
        match &self.pivot {
            None => (1..self.n).collect(),
            Some(p) => {
                let Some(l) = self.tables.log(target) else {
                    return Vec::new();
                };
                if l % p.g != 0 {
                    return Vec::new();
                }
                let base = mul_mod(l / p.g, p.inv, p.step);
                (0..p.g).map(|k| base + k * p.step).collect()
            }
        }
    }

    fn vanishes(&self, support: &[(u64, Trit)], exps: &[u64]) -> bool {
        exps.iter().all(|&z| {
            let mut acc = self.ctx.one();
            for &(s, c) in support {
                acc = self.ctx.add(acc, self.term(z, s, c));
            }
            acc.is_zero()
        })
    }

    /// Completes `free` with one solved position; `partial` is the value of
    /// `1 + Σ_free c·α^(pivot·s)`.
    fn complete(&self, free: &mut Vec<(u64, Trit)>, partial: FieldElem) -> bool {
        for c in COEFFS {
            // c·α^(pivot·s) = -partial, and c = c^{-1} in F_3.
            let target = self.ctx.neg(self.ctx.scale(c, partial));
            for s in self.solve(target) {
                if s == 0 || free.iter().any(|&(p, _)| p == s) {
                    continue;
                }
                free.push((s, c));
                if self.vanishes(free, &self.others) {
                    return true;
                }
                free.pop();
            }
        }
        false
    }

    fn pivot_term(&self, pos: u64, c: Trit) -> FieldElem {
        match &self.pivot {
            Some(p) => self.term(p.exp, pos, c),
            None => self.ctx.zero(),
        }
    }

    fn dfs(&self, free: &mut Vec<(u64, Trit)>, partial: FieldElem, remaining: u32) -> bool {
        if remaining == 0 {
            return self.complete(free, partial);
        }
        let start = free.last().map_or(1, |&(p, _)| p + 1);
        for p in start..self.n {
            for c in COEFFS {
                free.push((p, c));
                if self.dfs(free, self.ctx.add(partial, self.pivot_term(p, c)), remaining - 1) {
                    return true;
                }
                free.pop();
            }
        }
        false
    }

    fn search(&self, w: u32) -> Option<WeightWitness> {
        let found = if w == 2 {
            let mut free = Vec::new();
            self.complete(&mut free, self.ctx.one()).then_some(free)
        } else {
            (1..self.n).into_par_iter().find_map_first(|p0| {
                for c in COEFFS {
                    let mut free = vec![(p0, c)];
                    let partial = self.ctx.add(self.ctx.one(), self.pivot_term(p0, c));
                    if self.dfs(&mut free, partial, w - 3) {
                        return Some(free);
                    }
                }
                None
            })
        }?;
        let mut support_exponents: Vec<u64> = found.iter().map(|&(s, _)| s).collect();
        let mut coefficients: Vec<Trit> = found.iter().map(|&(_, c)| c).collect();
        support_exponents.push(0);
        coefficients.push(Trit::ONE);
        Some(WeightWitness {
            weight: w,
            support_exponents,
            coefficients,
        })
    }
}

/// Finds a nonzero codeword of minimal weight among weights `<= max_w`,
/// or `None` when the code has no such word. Weight 4 is only searched for
/// `m <= WEIGHT4_MAX_M`.
pub fn find_low_weight(code: &CyclicCode, max_w: u32, cap: u32) -> Result<Option<WeightWitness>> {
    let tables = PowerTables::new(code.ctx(), cap)?;
    find_low_weight_with(code, max_w, &tables)
}

/// [`find_low_weight`] with prebuilt tables for the code's field.
pub fn find_low_weight_with(
    code: &CyclicCode,
    max_w: u32,
    tables: &PowerTables,
) -> Result<Option<WeightWitness>> {
    if max_w > 4 {
        return Err(Error::InvalidArgument(format!(
            "low-weight search supports weights up to 4, not {max_w}"
        )));
    }
    if max_w == 4 && code.ctx().m() > WEIGHT4_MAX_M {
        return Err(Error::CapExceeded {
            m: code.ctx().m(),
            cap: WEIGHT4_MAX_M,
        });
    }
    // A single monomial never vanishes at a power of α.
    let searcher = Searcher::new(code, tables);
    for w in 2..=max_w {
        if let Some(wit) = searcher.search(w) {
            return Ok(Some(wit));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::build_code;
    use crate::field::DEFAULT_EXHAUSTIVE_CAP as CAP;

    fn ex1() -> FieldCtx {
        FieldCtx::new(&"x^4+2x^3+2".parse().unwrap()).unwrap()
    }

    #[test]
    fn worked_example_has_no_light_words() {
        let code = build_code(&ex1(), &[0, 1, 50]).unwrap();
        assert_eq!(find_low_weight(&code, 3, CAP).unwrap(), None);
        let w4 = find_low_weight(&code, 4, CAP).unwrap().unwrap();
        assert_eq!(w4.weight, 4);
        assert!(code.is_codeword(&w4.to_poly()));
    }

    #[test]
    fn zero_and_one_exclude_weight_two() {
        for m in 2..=6 {
            let ctx = FieldCtx::default_for(m).unwrap();
            for e in [2, 5, ctx.n() / 2 + 3] {
                let code = build_code(&ctx, &[0, 1, e % ctx.n()]).unwrap();
                assert_eq!(find_low_weight(&code, 2, CAP).unwrap(), None);
            }
        }
    }

    #[test]
    fn witnesses_are_codewords() {
        let ctx = FieldCtx::default_for(3).unwrap();
        // α^13 = -1, so x^13 + 1 is a weight-2 word.
        let code = build_code(&ctx, &[1]).unwrap();
        let w = find_low_weight(&code, 3, CAP).unwrap().unwrap();
        assert_eq!(w.weight, 2);
        assert_eq!(w.to_poly(), "x^13+1".parse().unwrap());

        // Zeros {0, 1} rule out weight 2 but not weight 3.
        let code = build_code(&ctx, &[0, 1]).unwrap();
        let w = find_low_weight(&code, 3, CAP).unwrap().unwrap();
        assert_eq!(w.weight, 3);
        assert!(code.is_codeword(&w.to_poly()));
        assert_eq!(w.to_poly().weight(), 3);

        let code = build_code(&ctx, &[0]).unwrap();
        let w = find_low_weight(&code, 3, CAP).unwrap().unwrap();
        assert_eq!((w.weight, w.support_exponents.clone()), (2, vec![1, 0]));
        assert!(code.is_codeword(&w.to_poly()));
    }

    #[test]
    fn deterministic_first_witness() {
        let ctx = FieldCtx::default_for(5).unwrap();
        let code = build_code(&ctx, &[1, 7]).unwrap();
        let a = find_low_weight(&code, 3, CAP).unwrap();
        let b = find_low_weight(&code, 3, CAP).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn weight_four_is_capped() {
        let ctx = FieldCtx::default_for(7).unwrap();
        let code = build_code(&ctx, &[1, 16]).unwrap();
        assert_eq!(
            find_low_weight(&code, 4, CAP),
            Err(Error::CapExceeded { m: 7, cap: 6 })
        );
    }
}
