//! Coset comparisons showing that a family's codes differ from the known
//! ones with the same shape.

use serde::{Deserialize, Serialize};

use super::{exponent_for, TheoremId};
use crate::arith::{mod_inv, mul_mod, pow3};
use crate::cosets::same_coset;
use crate::error::Result;
use crate::registry::{known_exponents, CodeShape};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequivalenceCheck {
    pub description: String,
    pub left: u64,
    pub right: u64,
    /// Registry rule the right-hand exponent came from, if any.
    pub rule_id: Option<String>,
    pub same_coset: bool,
    pub expected_same: bool,
}

impl InequivalenceCheck {
    pub fn pass(&self) -> bool {
        self.same_coset == self.expected_same
    }
}

fn pair(m: u32, description: String, left: u64, right: u64, rule_id: Option<String>, expected_same: bool) -> InequivalenceCheck {
    InequivalenceCheck {
        description,
        left,
        right,
        rule_id,
        same_coset: same_coset(left, right, m),
        expected_same,
    }
}

fn against_registry(m: u32, label: &str, e: u64, shape: CodeShape, u: Option<i64>) -> Vec<InequivalenceCheck> {
    known_exponents(shape, m)
        .into_iter()
        .filter(|k| u.is_none() || k.u() == u)
        .map(|k| {
            pair(
                m,
                format!("{label} vs {shape} {} {:?}", k.rule_id, k.params),
                e,
                k.e,
                Some(k.rule_id),
                false,
            )
        })
        .collect()
}

/// The coset comparisons backing the claim that the family is new. Families
/// without such a claim yield an empty list.
pub fn inequivalence_checks(id: TheoremId, m: u32) -> Result<Vec<InequivalenceCheck>> {
    if matches!(id, TheoremId::T4 | TheoremId::T5 | TheoremId::T6) {
        return Ok(Vec::new());
    }
    let inst = exponent_for(id, m, None)?;
    let n = pow3(m) - 1;
    let e = inst.e;
    let q = pow3(m / 2);
    let mut out = Vec::new();
    match id {
        TheoremId::T1 => {
            out.push(pair(
                m,
                "3e and -(1 + 3^(m/2))".into(),
                mul_mod(3, e, n),
                n - 1 - q,
                None,
                true,
            ));
            out.extend(against_registry(m, "e", e, CodeShape::C01e, None));
        }
        TheoremId::T2 => out.extend(against_registry(m, "e", e, CodeShape::C01e, None)),
        TheoremId::C1 | TheoremId::C2 => out.extend(against_registry(m, "e", e, CodeShape::C1es, None)),
        TheoremId::T3 => {
            // C(2,e) is equivalent to C(1, 2e^-1) since gcd(e, n) = 1.
            if let Some(inv) = mod_inv(e, n) {
                let v = mul_mod(2, inv, n);
                out.push(pair(m, "2e^-1 and 4·3^(m/2) - 2".into(), v, (4 * q - 2) % n, None, true));
                out.extend(against_registry(m, "2e^-1", v, CodeShape::C1v, None));
            }
            out.extend(against_registry(m, "e", e, CodeShape::Cuv, Some(2)));
        }
        TheoremId::T4 | TheoremId::T5 | TheoremId::T6 => unreachable!(),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosets::coset;

    #[test]
    fn t3_at_six() {
        let checks = inequivalence_checks(TheoremId::T3, 6).unwrap();
        let first = &checks[0];
        assert!(coset(106, 6).contains(first.left));
        assert!(first.pass());
        assert!(checks.len() > 5);
        assert!(checks.iter().all(|c| c.pass()), "{checks:#?}");
    }

    #[test]
    fn t1_identity_and_t2_reference() {
        let checks = inequivalence_checks(TheoremId::T1, 4).unwrap();
        assert_eq!((checks[0].left, checks[0].right), (150 % 80, 70));
        assert!(checks[0].same_coset);
        let t2 = inequivalence_checks(TheoremId::T2, 8).unwrap();
        assert_eq!(t2.len(), 1);
        assert_eq!((t2[0].left, t2[0].right, t2[0].same_coset), (3362, 82, false));
    }
}
