//! Known optimal exponent families, loaded from a line-oriented data file.
//! The record format and expression language are documented at the top of
//! `data/known_exponents.txt`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd_u128, pow3, solve_linear_congruence};
use crate::error::{Error, Result};

const BUILTIN: &str = include_str!("../data/known_exponents.txt");

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CodeShape {
    C1v,
    Cuv,
    C01e,
    C1es,
}

impl FromStr for CodeShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<CodeShape> {
        Ok(match s.trim() {
            "C_1v" => CodeShape::C1v,
            "C_uv" => CodeShape::Cuv,
            "C_01e" => CodeShape::C01e,
            "C_1es" => CodeShape::C1es,
            other => return Err(Error::Parse(format!("unknown code shape {other:?}"))),
        })
    }
}

impl fmt::Display for CodeShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeShape::C1v => "C_1v",
            CodeShape::Cuv => "C_uv",
            CodeShape::C01e => "C_01e",
            CodeShape::C1es => "C_1es",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Expr {
    Num(i128),
    Var(String),
    Neg(Box<Expr>),
    Bin(char, Box<Expr>, Box<Expr>),
    Call(String, Vec<Expr>),
}

#[derive(Copy, Clone, Debug, PartialEq)]
enum Cmp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

#[derive(Clone, Debug, PartialEq)]
struct Condition {
    lhs: Expr,
    op: Cmp,
    rhs: Expr,
}

#[derive(Clone, Debug, PartialEq)]
enum Binding {
    Fixed(String, Expr),
    Range(String, Expr, Expr),
}

/// One record of the data file.
#[derive(Clone, Debug, PartialEq)]
pub struct KnownFamily {
    pub shape: CodeShape,
    pub source: String,
    pub rule_id: String,
    pub params_text: String,
    pub exponent_text: String,
    pub conditions_text: String,
    params: Vec<Binding>,
    exponent: Expr,
    conditions: Vec<Condition>,
}

/// A family instance at a given `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownExponent {
    pub rule_id: String,
    pub source: String,
    /// Parameter bindings in declaration order.
    pub params: Vec<(String, i64)>,
    /// Exponent reduced mod `3^m - 1`, never zero.
    pub e: u64,
}

impl KnownExponent {
    /// The fixed first zero `u` of a `C_uv` instance.
    pub fn u(&self) -> Option<i64> {
        self.params.iter().find(|(k, _)| k == "u").map(|(_, v)| *v)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.err("trailing input"))
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(self.term()?));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(op @ ('*' | '/' | '%')) = self.peek() {
            self.pos += 1;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat("^") {
            return Ok(Expr::Bin('^', Box::new(base), Box::new(self.unary()?)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(")") {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                self.src[start..self.pos]
                    .parse()
                    .map(Expr::Num)
                    .map_err(|_| self.err("number out of range"))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                if self.eat("(") {
                    let mut args = vec![self.sum()?];
                    while self.eat(",") {
                        args.push(self.sum()?);
                    }
                    if !self.eat(")") {
                        return Err(self.err("expected ')'"));
                    }
                    let arity = match name.as_str() {
                        "gcd" | "solve" | "solve_even" => 2,
                        "prime" => 1,
                        _ => return Err(self.err(&format!("unknown function {name}"))),
                    };
                    if args.len() != arity {
                        return Err(self.err(&format!("{name} takes {arity} arguments")));
                    }
                    Ok(Expr::Call(name, args))
                } else {
                    Ok(Expr::Var(name))
                }
            }
            _ => Err(self.err("expected a number, name or '('")),
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        self.src[start..self.pos].to_string()
    }

    fn condition(&mut self) -> Result<Condition> {
        let lhs = self.sum()?;
        let op = [
            ("==", Cmp::Eq),
            ("!=", Cmp::Ne),
            ("<=", Cmp::Le),
            (">=", Cmp::Ge),
            ("<", Cmp::Lt),
            (">", Cmp::Gt),
        ]
        .into_iter()
        .find(|(t, _)| self.eat(t))
        .map(|(_, op)| op)
        .ok_or_else(|| self.err("expected a comparison"))?;
        let rhs = self.sum()?;
        Ok(Condition { lhs, op, rhs })
    }
}

fn parse_expr(src: &str) -> Result<Expr> {
    let mut p = Parser::new(src);
    let e = p.sum()?;
    p.finish()?;
    Ok(e)
}

fn parse_binding(src: &str) -> Result<Binding> {
    let (name, rhs) = src
        .split_once('=')
        .ok_or_else(|| Error::Parse(format!("parameter {src:?} lacks '='")))?;
    let name = name.trim().to_string();
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphabetic()) {
        return Err(Error::Parse(format!("bad parameter name in {src:?}")));
    }
    if ["m", "n", "s"].contains(&name.as_str()) {
        return Err(Error::Parse(format!("parameter {name} shadows a builtin")));
    }
    Ok(match rhs.split_once("..") {
        Some((lo, hi)) => Binding::Range(name, parse_expr(lo)?, parse_expr(hi)?),
        None => Binding::Fixed(name, parse_expr(rhs)?),
    })
}

fn parse_record(line: &str) -> Result<KnownFamily> {
    let fields: Vec<&str> = line.split('|').map(str::trim).collect();
    let [shape, source, rule_id, params, exponent, conditions] = fields[..] else {
        return Err(Error::Parse(format!(
            "expected 6 '|'-separated fields, got {}: {line:?}",
            fields.len()
        )));
    };
    if source.is_empty() || rule_id.is_empty() {
        return Err(Error::Parse(format!("empty source or rule id: {line:?}")));
    }
    let shape: CodeShape = shape.parse()?;
    let bindings = params
        .split(';')
        .filter(|p| !p.trim().is_empty())
        .map(parse_binding)
        .collect::<Result<Vec<_>>>()?;
    if shape == CodeShape::Cuv && !bindings.iter().any(|b| matches!(b, Binding::Fixed(n, _) if n == "u")) {
        return Err(Error::Parse(format!("C_uv record {rule_id} must bind u")));
    }
    let conds = conditions
        .split('&')
        .filter(|c| !c.trim().is_empty())
        .map(|c| {
            let mut p = Parser::new(c);
            let cond = p.condition()?;
            p.finish()?;
            Ok(cond)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(KnownFamily {
        shape,
        source: source.to_string(),
        rule_id: rule_id.to_string(),
        params_text: params.to_string(),
        exponent_text: exponent.to_string(),
        conditions_text: conditions.to_string(),
        params: bindings,
        exponent: parse_expr(exponent)?,
        conditions: conds,
    })
}

/// Parses a registry file, rejecting duplicate rule ids.
pub fn parse_registry(text: &str) -> Result<Vec<KnownFamily>> {
    let mut out: Vec<KnownFamily> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let rec = parse_record(line).map_err(|e| Error::Parse(format!("line {}: {e}", i + 1)))?;
        if out.iter().any(|r| r.rule_id == rec.rule_id) {
            return Err(Error::Parse(format!("line {}: duplicate rule id {}", i + 1, rec.rule_id)));
        }
        out.push(rec);
    }
    Ok(out)
}

/// The registry shipped with the crate.
pub fn builtin() -> &'static [KnownFamily] {
    static CELL: OnceLock<Vec<KnownFamily>> = OnceLock::new();
    CELL.get_or_init(|| parse_registry(BUILTIN).expect("bundled registry parses"))
}

struct Env {
    n: i128,
    vars: BTreeMap<String, i128>,
}

fn is_prime(a: i128) -> bool {
    if a < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= a {
        if a % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Env {
    fn new(m: u32) -> Env {
        let n = pow3(m) as i128 - 1;
        let vars = [("m", m as i128), ("n", n), ("s", n / 2)]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        Env { n, vars }
    }

    /// `None` when the expression is undefined here (inexact division,
    /// overflow, no unique solution, ...).
    fn eval(&self, e: &Expr) -> Option<i128> {
        match e {
            Expr::Num(v) => Some(*v),
            Expr::Var(name) => self.vars.get(name).copied(),
            Expr::Neg(a) => self.eval(a)?.checked_neg(),
            Expr::Bin(op, a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                match op {
                    '+' => a.checked_add(b),
                    '-' => a.checked_sub(b),
                    '*' => a.checked_mul(b),
                    '/' => (b != 0 && a % b == 0).then(|| a / b),
                    '%' => (b != 0).then(|| a.rem_euclid(b)),
                    '^' => a.checked_pow(u32::try_from(b).ok()?),
                    _ => unreachable!(),
                }
            }
            Expr::Call(name, args) => {
                let v: Vec<i128> = args.iter().map(|a| self.eval(a)).collect::<Option<_>>()?;
                match name.as_str() {
                    "gcd" => Some(gcd_u128(v[0].unsigned_abs(), v[1].unsigned_abs()) as i128),
                    "prime" => Some(is_prime(v[0]) as i128),
                    "solve" | "solve_even" => {
                        let n = self.n as u64;
                        let a = v[0].rem_euclid(self.n) as u64;
                        let b = v[1].rem_euclid(self.n) as u64;
                        let mut sols = solve_linear_congruence(a, b, n);
                        if name == "solve_even" {
                            sols.retain(|x| x % 2 == 0);
                        }
                        match sols[..] {
                            [x] => Some(x as i128),
                            _ => None,
                        }
                    }
                    _ => unreachable!(),
                }
            }
        }
    }

    fn holds(&self, c: &Condition) -> Option<bool> {
        let (a, b) = (self.eval(&c.lhs)?, self.eval(&c.rhs)?);
        Some(match c.op {
            Cmp::Eq => a == b,
            Cmp::Ne => a != b,
            Cmp::Lt => a < b,
            Cmp::Le => a <= b,
            Cmp::Gt => a > b,
            Cmp::Ge => a >= b,
        })
    }
}

impl KnownFamily {
    /// Every instance of this family at `m`, in parameter order.
    pub fn instances(&self, m: u32) -> Vec<KnownExponent> {
        let mut out = Vec::new();
        self.expand(&mut Env::new(m), 0, &mut Vec::new(), &mut out);
        out
    }

    fn expand(&self, env: &mut Env, i: usize, bound: &mut Vec<(String, i64)>, out: &mut Vec<KnownExponent>) {
        let Some(b) = self.params.get(i) else {
            if self.conditions.iter().all(|c| env.holds(c) == Some(true)) {
                if let Some(v) = env.eval(&self.exponent) {
                    let e = v.rem_euclid(env.n) as u64;
                    if e != 0 {
                        out.push(KnownExponent {
                            rule_id: self.rule_id.clone(),
                            source: self.source.clone(),
                            params: bound.clone(),
                            e,
                        });
                    }
                }
            }
            return;
        };
        let (name, lo, hi) = match b {
            Binding::Fixed(name, e) => match env.eval(e) {
                Some(v) => (name, v, v),
                None => return,
            },
            Binding::Range(name, lo, hi) => match (env.eval(lo), env.eval(hi)) {
                (Some(lo), Some(hi)) => (name, lo, hi),
                _ => return,
            },
        };
        for v in lo..=hi {
            env.vars.insert(name.clone(), v);
            bound.push((name.clone(), v as i64));
            self.expand(env, i + 1, bound, out);
            bound.pop();
        }
        env.vars.remove(name);
    }
}

/// All registry instances of the given shape at `m`.
pub fn known_exponents(shape: CodeShape, m: u32) -> Vec<KnownExponent> {
    known_exponents_in(builtin(), shape, m)
}

pub fn known_exponents_in(registry: &[KnownFamily], shape: CodeShape, m: u32) -> Vec<KnownExponent> {
    if !(2..=40).contains(&m) {
        return Vec::new();
    }
    registry
        .iter()
        .filter(|f| f.shape == shape)
        .flat_map(|f| f.instances(m))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn by_rule(shape: CodeShape, m: u32, rule: &str) -> Vec<u64> {
        known_exponents(shape, m)
            .into_iter()
            .filter(|k| k.rule_id == rule)
            .map(|k| k.e)
            .collect()
    }

    #[test]
    fn builtin_parses() {
        let r = builtin();
        assert!(r.len() > 50);
        assert_eq!(r.iter().filter(|f| f.shape == CodeShape::C1es).count(), 1);
    }

    #[test]
    fn examples() {
        let c01e = known_exponents(CodeShape::C01e, 4);
        assert_eq!(c01e.iter().map(|k| k.e).collect::<Vec<_>>(), vec![10]);
        assert!(by_rule(CodeShape::C1v, 5, "v-power-plus-one").contains(&4));
        let c1es = known_exponents(CodeShape::C1es, 8);
        assert_eq!(c1es.iter().map(|k| k.e).collect::<Vec<_>>(), vec![3280 + 1 + 81]);
        assert!(known_exponents(CodeShape::C1es, 5).is_empty());
    }

    #[test]
    fn u2_rows_at_six() {
        let all = known_exponents(CodeShape::Cuv, 6);
        assert!(all.iter().all(|k| k.u() == Some(2)));
        let es: Vec<u64> = all.iter().map(|k| k.e).collect();
        assert!(es.contains(&365), "{es:?}");
        assert!(es.contains(&489), "{es:?}");
    }

    #[test]
    fn solvers_are_exact() {
        for m in 2..=13 {
            let n = pow3(m) - 1;
            for k in known_exponents(CodeShape::C1v, m) {
                if k.rule_id == "v-solve-five-two" {
                    assert_eq!(5 * k.e % n, 2);
                    assert_eq!(k.e % 2, 0);
                }
            }
        }
    }

    #[test]
    fn instances_lie_in_range() {
        for m in 2..=13 {
            let n = pow3(m) - 1;
            for shape in [CodeShape::C1v, CodeShape::Cuv, CodeShape::C01e, CodeShape::C1es] {
                for k in known_exponents(shape, m) {
                    assert!((1..n).contains(&k.e), "{k:?}");
                }
            }
        }
    }

    #[test]
    fn rejects_malformed_records() {
        assert!(parse_registry("C_1v|a|b||3^|").is_err());
        assert!(parse_registry("C_9|a|b||1|").is_err());
        assert!(parse_registry("C_1v|a|b||1|m").is_err());
        assert!(parse_registry("C_uv|a|b||1|").is_err());
        assert!(parse_registry("C_1v|a|b||1|\nC_1v|a|b||2|").is_err());
        assert!(parse_registry("C_1v|a|b|m=1|1|").is_err());
        assert!(parse_registry("C_1v|a|b||foo(1)|").is_err());
        assert_eq!(parse_registry("# only a comment\n\n").unwrap().len(), 0);
    }

    #[test]
    fn evaluator_semantics() {
        let env = Env::new(3);
        let ev = |s: &str| env.eval(&parse_expr(s).unwrap());
        assert_eq!(ev("2^3^2"), Some(512));
        assert_eq!(ev("-2^2"), Some(-4));
        assert_eq!(ev("7/2"), None);
        assert_eq!(ev("(-7)%3"), Some(2));
        assert_eq!(ev("s + n + m"), Some(13 + 26 + 3));
        assert_eq!(ev("gcd(12, 18)"), Some(6));
        assert_eq!(ev("prime(13) + prime(1)"), Some(1));
        assert_eq!(ev("solve(2, 1)"), None);
        assert_eq!(ev("solve(3, 1)"), Some(9));
        assert_eq!(ev("k"), None);
    }
}
