//! Auxiliary polynomials whose factorizations the optimality arguments rely
//! on, and closed forms for the first few T4 exponents.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::arith::pow3;
use crate::error::Result;
use crate::polyf3::{factor, has_root_in_extension, Factorization, TritPoly, DEFAULT_SEED};

fn p(s: &str) -> TritPoly {
    s.parse().expect("valid literal")
}

/// A claimed factorization next to the computed one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorClaim {
    pub poly: TritPoly,
    pub computed: Factorization,
    /// `(degree, multiplicity)` pairs of the claim, ascending.
    pub expected_shape: Vec<(usize, u32)>,
    /// Factors given explicitly in the claim with their multiplicities.
    pub expected_explicit: Vec<(TritPoly, u32)>,
    pub matches: bool,
}

fn claim(poly: TritPoly, expected_shape: Vec<(usize, u32)>, explicit: Vec<(TritPoly, u32)>) -> Result<FactorClaim> {
    let computed = factor(&poly, DEFAULT_SEED)?;
    let mut shape = computed.shape();
    shape.sort_unstable();
    let mut expected_shape = expected_shape;
    expected_shape.sort_unstable();
    let matches = shape == expected_shape
        && explicit.iter().all(|(f, e)| computed.multiplicity_of(f) == *e)
        && computed.product() == poly;
    Ok(FactorClaim {
        poly,
        computed,
        expected_shape,
        expected_explicit: explicit,
        matches,
    })
}

/// `x(y1² + y1·y2 - y2²) + y1² - y1·y2 - y2²` with
/// `y1 = x^8 + x^6 - x^4 - x^2 + 1` and `y2 = x^8 - x^6 - x^4 + x^2 + 1`.
pub fn quartic_factor_poly() -> TritPoly {
    let y1 = p("x^8+x^6-x^4-x^2+1");
    let y2 = p("x^8-x^6-x^4+x^2+1");
    let a = &y1 * &y1;
    let b = &y1 * &y2;
    let c = &y2 * &y2;
    let plus = &(&a + &b) - &c;
    let minus = &(&a - &b) - &c;
    &(&TritPoly::x() * &plus) + &minus
}

/// The same polynomial in expanded form as it is usually quoted.
pub fn quartic_factor_printed() -> TritPoly {
    p("x^17-x^16+x^15+x^14+x^11+x^10-x^9+x^8-x^7-x^6-x^3-x^2+x-1")
}

fn quartic_factors() -> Vec<TritPoly> {
    vec![p("x^4+x-1"), p("x^4-x^3-1"), p("x^4-x^3+x^2-x+1")]
}

/// Claimed: `(x - 1)^5` times three irreducible quartics.
pub fn quartic_factor_claim() -> Result<FactorClaim> {
    let mut explicit = vec![(p("x-1"), 5)];
    explicit.extend(quartic_factors().into_iter().map(|f| (f, 1)));
    claim(quartic_factor_poly(), vec![(1, 5), (4, 1), (4, 1), (4, 1)], explicit)
}

/// True iff none of the quartic factors has a root in GF(3^m).
pub fn quartic_factors_rootless(m: u32) -> Result<bool> {
    for f in quartic_factors() {
        if has_root_in_extension(&f, m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `h2·x^27 - h1`, where with `f = x^9+x^8+x^4-x^3+x^2+x` and
/// `g = x^8+x^7-x^6+x^5+x+1`:
/// `h1 = f^9 + f^8 g + f^4 g^5 - f^3 g^6 + f^2 g^7 + f g^8`,
/// `h2 = f^8 g + f^7 g^2 - f^6 g^3 + f^5 g^4 + f g^8 + g^9`.
pub fn thirteen_claim_poly() -> TritPoly {
    let f = p("x^9+x^8+x^4-x^3+x^2+x");
    let g = p("x^8+x^7-x^6+x^5+x+1");
    let fg = |i: u32, j: u32| &f.pow(i) * &g.pow(j);
    let sum = |terms: &[(u32, u32, bool)]| {
        terms.iter().fold(TritPoly::zero(), |acc, &(i, j, neg)| {
            if neg {
                &acc - &fg(i, j)
            } else {
                &acc + &fg(i, j)
            }
        })
    };
    let h1 = sum(&[(9, 0, false), (8, 1, false), (4, 5, false), (3, 6, true), (2, 7, false), (1, 8, false)]);
    let h2 = sum(&[(8, 1, false), (7, 2, false), (6, 3, true), (5, 4, false), (1, 8, false), (0, 9, false)]);
    &h2.shl(27) - &h1
}

/// Claimed: `x(x + 1)(x - 1)^9`, two explicit nonics and six irreducible
/// factors of degree 13.
pub fn thirteen_factor_claim() -> Result<FactorClaim> {
    let explicit = vec![
        (p("x"), 1),
        (p("x+1"), 1),
        (p("x-1"), 9),
        (p("x^9-x^7-x^5+x^4+x^3+x^2-1"), 1),
        (p("x^9-x^7-x^6-x^5+x^4+x^2-1"), 1),
    ];
    let mut shape = vec![(1, 1), (1, 1), (1, 9), (9, 1), (9, 1)];
    shape.extend([(13, 1); 6]);
    claim(thirteen_claim_poly(), shape, explicit)
}

fn degree13_factors() -> Result<&'static [TritPoly]> {
    static CELL: OnceLock<Vec<TritPoly>> = OnceLock::new();
    if let Some(v) = CELL.get() {
        return Ok(v);
    }
    let fz = factor(&thirteen_claim_poly(), DEFAULT_SEED)?;
    let v = fz
        .factors
        .into_iter()
        .filter(|(f, _)| f.degree() == Some(13))
        .map(|(f, _)| f)
        .collect();
    Ok(CELL.get_or_init(|| v))
}

/// True iff none of the degree-13 factors has a root in GF(3^m).
pub fn degree13_factors_rootless(m: u32) -> Result<bool> {
    for f in degree13_factors()? {
        if has_root_in_extension(f, m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Closed form for the T4 exponent when `h <= 3`, where one is known.
pub fn t4_remark_exponent(m: u32, h: u32) -> Option<u64> {
    if m % 2 == 0 || m < 3 || m > 25 {
        return None;
    }
    let n = (pow3(m) - 1) as u128;
    let s = n / 2;
    let q = |k: u32| pow3(k) as u128;
    let a = (q(m) + 1) / 4;
    let b = (q(m + 1) - 1) / 8;
    let e = match h {
        1 => s + a,
        2 if m % 4 == 1 => s + b * a % n,
        2 => b * a % n,
        3 if m % 6 == 5 => (q(m + 1) - 1) / 26 * a % n,
        3 if m % 12 == 1 || m % 12 == 7 => {
            let c = (q(m + 2) - 1) / 26;
            let base = c * a % n * b % n;
            if m % 12 == 1 {
                s + base
            } else {
                base
            }
        }
        _ => return None,
    };
    Some((e % n) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::{exponent_for, TheoremId};

    #[test]
    fn quartic_poly_expands_as_printed() {
        assert_eq!(quartic_factor_poly(), quartic_factor_printed());
        let c = quartic_factor_claim().unwrap();
        assert!(c.matches, "{}", c.computed);
    }

    #[test]
    fn quartic_roots_need_four_dividing_m() {
        for m in 1..=12 {
            assert_eq!(quartic_factors_rootless(m).unwrap(), m % 4 != 0, "m={m}");
        }
    }

    #[test]
    fn remark_closed_forms_match_solver() {
        for m in [3u32, 5, 7, 9, 11, 13] {
            for h in 1..=3.min(m - 1) {
                let Some(closed) = t4_remark_exponent(m, h) else {
                    continue;
                };
                let solved = exponent_for(TheoremId::T4, m, Some(h)).unwrap().e;
                assert_eq!(closed, solved, "m={m} h={h}");
            }
        }
        assert_eq!(t4_remark_exponent(9, 3), None);
    }

    #[test]
    fn thirteen_claim_holds() {
        let c = thirteen_factor_claim().unwrap();
        assert!(c.matches, "{}", c.computed);
        assert!(degree13_factors_rootless(7).unwrap());
        assert!(degree13_factors_rootless(11).unwrap());
        assert!(!degree13_factors_rootless(13).unwrap());
    }
}
