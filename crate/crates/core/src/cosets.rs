//! 3-cyclotomic cosets modulo `3^m - 1` and the closed-form coset-size
//! criteria.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, mul_mod, pow3};

/// Orbit of an exponent under multiplication by 3 modulo `3^m - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coset {
    pub m: u32,
    pub leader: u64,
    /// Sorted ascending.
    pub members: Vec<u64>,
}

impl Coset {
    pub fn size(&self) -> u32 {
        self.members.len() as u32
    }

    pub fn contains(&self, j: u64) -> bool {
        let n = pow3(self.m) - 1;
        self.members.binary_search(&(j % n)).is_ok()
    }
}

impl fmt::Display for Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ms: Vec<String> = self.members.iter().map(u64::to_string).collect();
        write!(f, "C_{} = {{{}}}", self.leader, ms.join(", "))
    }
}

/// The members of the orbit of `j` in generation order `j, 3j, 9j, ...`.
pub fn orbit(j: u64, m: u32) -> Vec<u64> {
    let n = pow3(m) - 1;
    let start = j % n;
    let mut out = vec![start];
    let mut cur = mul_mod(start, 3, n);
    while cur != start {
        out.push(cur);
        cur = mul_mod(cur, 3, n);
    }
    out
}

pub fn coset(j: u64, m: u32) -> Coset {
    let mut members = orbit(j, m);
    members.sort_unstable();
    Coset {
        m,
        leader: members[0],
        members,
    }
}

pub fn same_coset(a: u64, b: u64, m: u32) -> bool {
    let n = pow3(m) - 1;
    orbit(a, m).contains(&(b % n))
}

pub fn coset_leader(j: u64, m: u32) -> u64 {
    *orbit(j, m).iter().min().unwrap()
}

/// Which closed-form criterion predicted a coset size.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SizeRule {
    /// `1 <= gcd(e, n) <= 2`.
    SmallGcd,
    /// `gcd(e, n)·gcd(3^j - 1, n) ≢ 0 (mod n)` for all `1 <= j < m`.
    GcdProducts,
    /// `e = 3^k + 1`.
    PowerPlusOne,
    /// `m` odd and `e = (3^h + 5)/2` with `h` odd.
    HalfPowerPlusFive,
}

impl fmt::Display for SizeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SizeRule::SmallGcd => "gcd(e,n) <= 2",
            SizeRule::GcdProducts => "gcd(e,n)*gcd(3^j-1,n) != 0 mod n",
            SizeRule::PowerPlusOne => "e = 3^k+1",
            SizeRule::HalfPowerPlusFive => "e = (3^h+5)/2, h odd, m odd",
        };
        f.write_str(s)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizePrediction {
    pub size: u32,
    pub rule: SizeRule,
}

/// Coset size promised by one of the closed-form criteria, or `None` when
/// none applies. Defined for `1 <= e <= 3^m - 2`.
pub fn coset_size_predicted(e: u64, m: u32) -> Option<SizePrediction> {
    let n = pow3(m) - 1;
    if e == 0 || e >= n {
        return None;
    }
    for k in 1..m {
        if e == pow3(k) + 1 {
            let size = if m % 2 == 0 && 2 * k == m { m / 2 } else { m };
            return Some(SizePrediction {
                size,
                rule: SizeRule::PowerPlusOne,
            });
        }
    }
    let g = gcd(e, n);
    if g <= 2 {
        return Some(SizePrediction {
            size: m,
            rule: SizeRule::SmallGcd,
        });
    }
    let products_ok = (1..m).all(|j| {
        let gj = gcd(pow3(j) - 1, n);
        (g as u128 * gj as u128) % n as u128 != 0
    });
    if products_ok {
        return Some(SizePrediction {
            size: m,
            rule: SizeRule::GcdProducts,
        });
    }
    if m % 2 == 1 {
        let mut h = 1;
        while h <= 40 && pow3(h) < 2 * n {
            if (pow3(h) + 5) / 2 == e {
                return Some(SizePrediction {
                    size: m,
                    rule: SizeRule::HalfPowerPlusFive,
                });
            }
            h += 2;
        }
    }
    None
}

/// All coset leaders modulo `3^m - 1`, ascending.
pub fn leaders(m: u32) -> Vec<u64> {
    let n = pow3(m) - 1;
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for j in 0..n {
        if seen[j as usize] {
            continue;
        }
        out.push(j);
        for x in orbit(j, m) {
            seen[x as usize] = true;
        }
    }
    out
}

/// Memoizing coset lookup for one `m`, keyed by leader and shareable
/// across threads.
#[derive(Debug)]
pub struct CosetCache {
    m: u32,
    by_leader: Mutex<HashMap<u64, Arc<Coset>>>,
}

impl CosetCache {
    pub fn new(m: u32) -> CosetCache {
        CosetCache {
            m,
            by_leader: Mutex::new(HashMap::new()),
        }
    }

    pub fn get(&self, j: u64) -> Arc<Coset> {
        let leader = coset_leader(j, self.m);
        let mut map = self.by_leader.lock().unwrap();
        map.entry(leader)
            .or_insert_with(|| Arc::new(coset(leader, self.m)))
            .clone()
    }

    pub fn len(&self) -> usize {
        self.by_leader.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
