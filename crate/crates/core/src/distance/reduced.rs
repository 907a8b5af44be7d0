//! One-variable equations whose solvability over GF(3^m) decides whether a
//! code of a specific shape has a nonzero word of weight at most 3.
//!
//! Every scan runs over all field elements in coordinate-counter order and
//! reports the first solution.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::field::{FieldCtx, FieldElem};
use crate::polyf3::Trit;

/// Zero-set shapes with a reduced criterion.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Shape {
    /// Zeros `{0, 1, e}`.
    C01e,
    /// Zeros `{1, e, (3^m - 1)/2}`.
    C1es,
    /// Zeros `{1, e}`.
    C1e,
    /// Zeros `{2, e}`.
    C2e,
}

impl Shape {
    pub const ALL: [Shape; 4] = [Shape::C01e, Shape::C1es, Shape::C1e, Shape::C2e];

    pub fn zeros(self, n: u64, e: u64) -> Vec<u64> {
        match self {
            Shape::C01e => vec![0, 1, e],
            Shape::C1es => vec![1, e, n / 2],
            Shape::C1e => vec![1, e],
            Shape::C2e => vec![2, e],
        }
    }

    /// Recognizes a zero set of one of the four shapes and returns its `e`.
    /// `{0, 1, s}` reads as `C(0,1,e)` and `{1, 2}` as `C(1,e)`.
    pub fn classify(zeros: &[u64], n: u64) -> Option<(Shape, u64)> {
        let mut z = zeros.to_vec();
        z.sort_unstable();
        z.dedup();
        let other = |fixed: &[u64]| -> Option<u64> {
            let rest: Vec<u64> = z.iter().copied().filter(|v| !fixed.contains(v)).collect();
            (rest.len() == 1 && z.len() == fixed.len() + 1 && fixed.iter().all(|f| z.contains(f)))
                .then(|| rest[0])
        };
        if let Some(e) = other(&[0, 1]) {
            return Some((Shape::C01e, e));
        }
        if let Some(e) = other(&[1, n / 2]) {
            return Some((Shape::C1es, e));
        }
        if let Some(e) = other(&[1]) {
            return Some((Shape::C1e, e));
        }
        other(&[2]).map(|e| (Shape::C2e, e))
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::C01e => "C(0,1,e)",
            Shape::C1es => "C(1,e,s)",
            Shape::C1e => "C(1,e)",
            Shape::C2e => "C(2,e)",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReducedEquation {
    SumPlus,
    SumMinus,
    OddSum,
    SquareMinus,
    SquarePlus,
    Character,
}

impl fmt::Display for ReducedEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReducedEquation::SumPlus => "(x+1)^e + x^e + 1 = 0",
            ReducedEquation::SumMinus => "(x+1)^e - x^e - 1 = 0",
            ReducedEquation::OddSum => "x^e - (x+1)^e + 1 = 0",
            ReducedEquation::SquareMinus => "(1+x^2)^e - (1+x^e)^2 = 0",
            ReducedEquation::SquarePlus => "(1+x^2)^e + (1+x^e)^2 = 0",
            ReducedEquation::Character => "χ(x)x^e + χ(y)y^e + 1 = 0, χ(y)y = -(1+χ(x)x)",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReducedOutcome {
    NoSolution,
    Solution {
        x: FieldElem,
        equation: ReducedEquation,
    },
    /// The parity of `e` alone yields a weight-2 codeword.
    ParityFail,
}

impl ReducedOutcome {
    /// True when the code has a nonzero word of weight at most 3.
    pub fn low_weight_exists(self) -> bool {
        self != ReducedOutcome::NoSolution
    }
}

fn outside_prime_field(x: FieldElem) -> bool {
    x.as_trit().is_none()
}

fn found(hit: Option<(FieldElem, ReducedEquation)>) -> ReducedOutcome {
    match hit {
        Some((x, equation)) => ReducedOutcome::Solution { x, equation },
        None => ReducedOutcome::NoSolution,
    }
}

/// Zeros `{0, 1, e}`: a weight-3 word is `-(x+1)`, `x`, `1` with all
/// coefficients equal, so the criterion is `(-(x+1))^e + x^e + 1 = 0` over
/// `x ∉ F_3`.
pub fn weight3_reduced_c01e(ctx: &FieldCtx, e: u64, cap: u32) -> Result<ReducedOutcome> {
    let (sign, equation) = if e % 2 == 0 {
        (Trit::ONE, ReducedEquation::SumPlus)
    } else {
        (Trit::TWO, ReducedEquation::OddSum)
    };
    let hit = ctx.scan_first(cap, |x| {
        if !outside_prime_field(x) {
            return None;
        }
        let a = ctx.scale(sign, ctx.pow(ctx.add(x, ctx.one()), e));
        let v = ctx.add(ctx.add(a, ctx.pow(x, e)), ctx.one());
        v.is_zero().then_some(equation)
    })?;
    Ok(found(hit))
}

/// Zeros `{1, e}`: no weight-2 word iff `e` is even, and then a weight-3
/// word exists iff `(x+1)^e = ±(x^e + 1)` for some `x ∉ F_3`.
pub fn weight3_reduced_1e(ctx: &FieldCtx, e: u64, cap: u32) -> Result<ReducedOutcome> {
    if e % 2 == 1 {
        return Ok(ReducedOutcome::ParityFail);
    }
    let hit = ctx.scan_first(cap, |x| {
        if !outside_prime_field(x) {
            return None;
        }
        let a = ctx.pow(ctx.add(x, ctx.one()), e);
        let b = ctx.add(ctx.pow(x, e), ctx.one());
        if ctx.add(a, b).is_zero() {
            Some(ReducedEquation::SumPlus)
        } else if a == b {
            Some(ReducedEquation::SumMinus)
        } else {
            None
        }
    })?;
    Ok(found(hit))
}

/// Zeros `{2, e}`: no weight-2 word iff `e` is odd, and then a weight-3
/// word exists iff `(1+x^2)^e = ±(1+x^e)^2` for some `x ∉ F_3`.
pub fn weight3_reduced_2e(ctx: &FieldCtx, e: u64, cap: u32) -> Result<ReducedOutcome> {
    if e % 2 == 0 {
        return Ok(ReducedOutcome::ParityFail);
    }
    let hit = ctx.scan_first(cap, |x| {
        if !outside_prime_field(x) {
            return None;
        }
        let a = ctx.pow(ctx.add(ctx.one(), ctx.square(x)), e);
        let b = ctx.square(ctx.add(ctx.one(), ctx.pow(x, e)));
        if a == b {
            Some(ReducedEquation::SquareMinus)
        } else if ctx.add(a, b).is_zero() {
            Some(ReducedEquation::SquarePlus)
        } else {
            None
        }
    })?;
    Ok(found(hit))
}

/// Zeros `{1, e, s}` with `s = (3^m - 1)/2`. A weight-2 word exists iff
/// `m` and `e` are both odd. Otherwise, the zero `s` turns coefficients into
/// quadratic characters: a weight-3 word is `χ(x)·X^i + χ(y)·X^j + 1` with
/// `x = α^i`, `y = α^j`, `χ(x)x + χ(y)y + 1 = 0` and
/// `χ(x)x^e + χ(y)y^e + 1 = 0`. Given `x ∉ {0, 1}` there are at most two
/// candidates `y = ±w` with `w = -(1 + χ(x)x)`.
pub fn weight3_reduced_1es(ctx: &FieldCtx, e: u64, cap: u32) -> Result<ReducedOutcome> {
    if ctx.m() % 2 == 1 && e % 2 == 1 {
        return Ok(ReducedOutcome::ParityFail);
    }
    let half = ctx.n() / 2;
    let one = ctx.one();
    let chi = |x: FieldElem| ctx.pow(x, half);
    let hit = ctx.scan_first(cap, |x| {
        if x.is_zero() || x == one {
            return None;
        }
        let cx = chi(x);
        let w = ctx.neg(ctx.add(one, ctx.mul(cx, x)));
        if w.is_zero() {
            return None;
        }
        let lhs_x = ctx.mul(cx, ctx.pow(x, e));
        for y in [w, ctx.neg(w)] {
            if y == one || y == x {
                continue;
            }
            let cy = chi(y);
            if ctx.mul(cy, y) != w {
                continue;
            }
            let v = ctx.add(ctx.add(lhs_x, ctx.mul(cy, ctx.pow(y, e))), one);
            if v.is_zero() {
                return Some(ReducedEquation::Character);
            }
        }
        None
    })?;
    Ok(found(hit))
}

pub fn weight3_reduced(shape: Shape, ctx: &FieldCtx, e: u64, cap: u32) -> Result<ReducedOutcome> {
    match shape {
        Shape::C01e => weight3_reduced_c01e(ctx, e, cap),
        Shape::C1es => weight3_reduced_1es(ctx, e, cap),
        Shape::C1e => weight3_reduced_1e(ctx, e, cap),
        Shape::C2e => weight3_reduced_2e(ctx, e, cap),
    }
}
