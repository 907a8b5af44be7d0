//! Upper bound on the size of ternary codes of given length and minimum
//! distance, used to show that no `[n, k, d + 1]` code exists.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundVerdict {
    /// `3^k` exceeds the bound: no code with these parameters exists.
    Excluded,
    NotExcluded,
}

impl fmt::Display for BoundVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundVerdict::Excluded => "Excluded",
            BoundVerdict::NotExcluded => "NotExcluded",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: u64,
    pub d: u64,
    pub k: u64,
    pub t: u64,
    pub r: u64,
    /// `floor(3^(t+2r) / Σ_{i<=r} C(t+2r, i)·2^i)`.
    #[serde(with = "decimal")]
    pub bound: BigUint,
    /// `3^k`.
    #[serde(with = "decimal")]
    pub code_size: BigUint,
    pub verdict: BoundVerdict,
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        BigUint::parse_bytes(s.as_bytes(), 10)
            .ok_or_else(|| serde::de::Error::custom(format!("bad integer {s:?}")))
    }
}

fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Evaluates the bound `A_3(n, d) <= 3^(t+2r) / Σ_{i=0}^{r} C(t+2r, i)·2^i`
/// with `t = n - d + 1` and `r = floor(min((n - t)/2, t - 1))`, and compares
/// it with `3^k`. Requires `1 <= d <= n`.
pub fn optimality_bound(n: u64, d: u64, k: u64) -> BoundReport {
    assert!(1 <= d && d <= n, "need 1 <= d <= n, got d={d}, n={n}");
    let t = n - d + 1;
    // p - 2 = 1 for ternary codes.
    let r = ((n - t) / 2).min(t - 1);
    let len = t + 2 * r;
    let mut denom = BigUint::from(0u32);
    for i in 0..=r {
        denom += binomial(len, i) << i;
    }
    let three = BigUint::from(3u32);
    let bound = three.pow(len as u32) / denom;
    let code_size = three.pow(k as u32);
    let verdict = if code_size > bound {
        BoundVerdict::Excluded
    } else {
        BoundVerdict::NotExcluded
    };
    BoundReport {
        n,
        d,
        k,
        t,
        r,
        bound,
        code_size,
        verdict,
    }
}
