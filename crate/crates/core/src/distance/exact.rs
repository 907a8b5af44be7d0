//! True minimum distance of small cyclic codes.
//!
//! Two enumerations are available and the cheaper one is used:
//! all `3^k` multiples of the generator when `3^k` fits the budget, and
//! otherwise increasing-weight enumeration of normalized words checked
//! through the residues `x^p mod g`.

use std::collections::HashMap;

use crate::codes::CyclicCode;
use crate::error::{Error, Result};
use crate::polyf3::{Trit, TritPoly};

/// Default work budget (number of candidate words examined).
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 531_441; // 3^12

/// Minimum Hamming weight over all nonzero codewords, or
/// [`Error::BudgetExceeded`] with the best lower bound reached.
pub fn exact_min_distance(code: &CyclicCode, budget: u64) -> Result<u64> {
    let k = code.k();
    if k == 0 {
        return Err(Error::InvalidArgument("the zero code has no minimum distance".into()));
    }
    let needed = 3u128.checked_pow(k as u32).unwrap_or(u128::MAX);
    if needed <= budget as u128 {
        return Ok(by_messages(code));
    }
    by_weight(code, budget, needed)
}

fn by_messages(code: &CyclicCode) -> u64 {
    let k = code.k() as usize;
    let g = code.generator();
    let shifted: Vec<TritPoly> = (0..k).map(|i| g.shl(i)).collect();
    let mut digits = vec![0u8; k];
    let mut word = TritPoly::zero();
    let mut best = u64::MAX;
    loop {
        // Base-3 increment: every digit that changes adds x^i·g once, since
        // 2 -> 0 is also +1 modulo 3.
        let mut i = 0;
        loop {
            if i == k {
                return best;
            }
            word = &word + &shifted[i];
            digits[i] = (digits[i] + 1) % 3;
            if digits[i] != 0 {
                break;
            }
            i += 1;
        }
        best = best.min(word.weight() as u64);
    }
}

struct WeightSearch {
    n: u64,
    residues: Vec<TritPoly>,
    by_residue: HashMap<TritPoly, Vec<u64>>,
    budget: u64,
    spent: u64,
}

impl WeightSearch {
    /// Whether a word of weight `free.len() + 2` exists extending `free`
    /// (ascending positions > 0) by one more position and the fixed `x^0`.
    fn search(&mut self, partial: &TritPoly, last: u64, remaining: u32) -> Option<bool> {
        if remaining == 0 {
            self.spent += 1;
            if self.spent > self.budget {
                return None;
            }
            for c in [Trit::ONE, Trit::TWO] {
                let need = partial.scale(-c);
                if let Some(ps) = self.by_residue.get(&need) {
                    if ps.iter().any(|&p| p > last) {
                        return Some(true);
                    }
                }
            }
            return Some(false);
        }
        for p in last + 1..self.n {
            for c in [Trit::ONE, Trit::TWO] {
                let next = partial + &self.residues[p as usize].scale(c);
                if self.search(&next, p, remaining - 1)? {
                    return Some(true);
                }
            }
        }
        Some(false)
    }
}

fn by_weight(code: &CyclicCode, budget: u64, needed: u128) -> Result<u64> {
    let n = code.n();
    let g = code.generator();
    let mut residues = Vec::with_capacity(n as usize);
    let mut r = TritPoly::one().rem(g)?;
    for _ in 0..n {
        residues.push(r.clone());
        r = r.shl(1).rem(g)?;
    }
    if residues[0].is_zero() {
        return Ok(1);
    }
    let mut by_residue: HashMap<TritPoly, Vec<u64>> = HashMap::new();
    for (p, res) in residues.iter().enumerate().skip(1) {
        by_residue.entry(res.clone()).or_default().push(p as u64);
    }
    let first = residues[0].clone();
    let mut s = WeightSearch {
        n,
        residues,
        by_residue,
        budget,
        spent: 0,
    };
    for w in 2..=n {
        // Normalized word: 1·x^0 plus w - 1 positions in 1..n, the last of
        // them solved by residue lookup.
        match s.search(&first, 0, (w - 2) as u32) {
            Some(true) => return Ok(w),
            Some(false) => {}
            None => {
                return Err(Error::BudgetExceeded {
                    needed,
                    budget,
                    lower_bound: w,
                })
            }
        }
    }
    unreachable!("the generator's multiple x^n - 1 has weight 2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::build_code;
    use crate::distance::find_low_weight;
    use crate::field::{FieldCtx, DEFAULT_EXHAUSTIVE_CAP as CAP};

    #[test]
    fn repetition_code() {
        for m in 2..=3 {
            let ctx = FieldCtx::default_for(m).unwrap();
            let n = ctx.n();
            let zeros: Vec<u64> = (1..n).collect();
            let code = build_code(&ctx, &zeros).unwrap();
            assert_eq!(code.k(), 1);
            assert_eq!(exact_min_distance(&code, DEFAULT_ENUMERATION_BUDGET).unwrap(), n);
        }
    }

    #[test]
    fn routes_agree() {
        let ctx = FieldCtx::default_for(2).unwrap();
        for e in 1..8 {
            let code = build_code(&ctx, &[0, 1, e]).unwrap();
            let a = by_messages(&code);
            let b = by_weight(&code, u64::MAX, 0).unwrap();
            assert_eq!(a, b, "e={e}");
        }
        let ctx = FieldCtx::default_for(3).unwrap();
        for zeros in [vec![0, 1, 2, 4, 13], vec![1, 2, 4, 5], vec![1, 13]] {
            let code = build_code(&ctx, &zeros).unwrap();
            if code.k() <= 12 {
                assert_eq!(by_messages(&code), by_weight(&code, u64::MAX, 0).unwrap());
            }
        }
    }

    #[test]
    fn small_code_matches_low_weight_verdict() {
        let ctx = FieldCtx::default_for(3).unwrap();
        let code = build_code(&ctx, &[1, 4]).unwrap();
        let d = exact_min_distance(&code, DEFAULT_ENUMERATION_BUDGET).unwrap();
        let light = find_low_weight(&code, 3, CAP).unwrap();
        assert_eq!(d >= 4, light.is_none());
        if let Some(w) = light {
            assert_eq!(w.weight as u64, d);
        }
    }

    #[test]
    fn large_code_exceeds_budget() {
        let ctx = FieldCtx::new(&"x^4+2x^3+2".parse().unwrap()).unwrap();
        let code = build_code(&ctx, &[0, 1, 50]).unwrap();
        // Weight 2 costs one candidate and weight 3 costs 158.
        match exact_min_distance(&code, 100) {
            Err(Error::BudgetExceeded { lower_bound, .. }) => assert_eq!(lower_bound, 3),
            other => panic!("unexpected {other:?}"),
        }
    }
}
