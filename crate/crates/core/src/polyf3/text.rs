//! Text forms of F_3 polynomials.
//!
//! Human form: `x^7+2x^6+x^5+x^3+2x+2` (descending powers, coefficients 1
//! and 2, zero terms omitted). Machine form: little-endian coefficient list
//! `2,2,0,1,0,1,2,1`. The parser accepts both, plus `-` signs, `*`,
//! whitespace and arbitrary integer coefficients (reduced mod 3).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Trit, TritPoly};
use crate::error::Error;

impl Serialize for TritPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TritPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for TritPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for i in (0..=d).rev() {
            let c = self.coeff(i);
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let cs = if c == Trit::TWO { "2" } else { "" };
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{cs}x")?,
                _ => write!(f, "{cs}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl TritPoly {
    /// Little-endian comma-separated coefficient list; `0` for zero.
    pub fn to_machine(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl FromStr for TritPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let has_x = cleaned.contains(['x', 'X']);
        if !has_x && cleaned.contains(',') {
            return parse_machine(&cleaned);
        }
        parse_human(&cleaned)
    }
}

fn parse_int(s: &str, whole: &str) -> Result<i64, Error> {
    s.parse::<i64>()
        .map_err(|_| Error::Parse(format!("bad integer {s:?} in {whole:?}")))
}

fn parse_machine(s: &str) -> Result<TritPoly, Error> {
    let coeffs = s
        .split(',')
        .map(|t| parse_int(t, s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TritPoly::from_ints(&coeffs))
}

fn parse_human(s: &str) -> Result<TritPoly, Error> {
    let mut terms: Vec<(bool, &str)> = Vec::new();
    let mut start = 0;
    let mut negative = false;
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if (b == b'+' || b == b'-') && i > 0 && bytes[i - 1] != b'^' {
            terms.push((negative, &s[start..i]));
            negative = b == b'-';
            start = i + 1;
        } else if i == 0 && (b == b'+' || b == b'-') {
            negative = b == b'-';
            start = 1;
        }
    }
    terms.push((negative, &s[start..]));

    let mut out = TritPoly::zero();
    for (neg, term) in terms {
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in {s:?}")));
        }
        let (coef, power) = match term.find(['x', 'X']) {
            None => (parse_int(term, s)?, 0usize),
            Some(pos) => {
                let c = term[..pos].trim_end_matches('*');
                let c = if c.is_empty() { 1 } else { parse_int(c, s)? };
                let rest = &term[pos + 1..];
                let pw = if rest.is_empty() {
                    1
                } else if let Some(e) = rest.strip_prefix('^') {
                    e.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad exponent {e:?} in {s:?}")))?
                } else {
                    return Err(Error::Parse(format!("unexpected {rest:?} in {s:?}")));
                };
                (c, pw)
            }
        };
        let c = Trit::new(if neg { -coef } else { coef });
        out.add_scaled_shifted(&TritPoly::one(), power, c);
    }
    Ok(out)
}
