//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p ternary-cyclic-cli --test acceptance -- --nocapture`.

use std::collections::BTreeSet;
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use ternary_cyclic::arith::{pow3, solve_linear_congruence};
use ternary_cyclic::codes::eval_at;
use ternary_cyclic::cosets::{coset, coset_size_predicted};
use ternary_cyclic::distance::{
    exact_min_distance, find_low_weight, optimality_bound, weight3_reduced, BoundVerdict, Shape,
    DEFAULT_ENUMERATION_BUDGET,
};
use ternary_cyclic::field::DEFAULT_EXHAUSTIVE_CAP as CAP;
use ternary_cyclic::polyf3::is_irreducible;
use ternary_cyclic::theorems::{
    inequivalence_checks, quartic_factor_printed, thirteen_factor_claim, SweepItem, SweepOutcome,
    TheoremId, Verdict,
};
use ternary_cyclic::{build_code, FieldCtx, FieldElem, Trit, TritPoly};

/// Time limit for rebuilding the reference codes.
const TABLE_TIME_LIMIT: Duration = Duration::from_secs(10);
/// Largest m in the theorem sweep.
const SWEEP_MAX_M: u32 = 13;
/// Oracle-equivalence sample: m range and exponents drawn per shape.
const ORACLE_MAX_M: u32 = 6;
const ORACLE_SAMPLES: usize = 200;
const EXACT_MAX_M: u32 = 3;
/// Property-suite sizes.
const COSET_MAX_M: u32 = 8;
const PRODUCT_MAX_R: u32 = 3;
const ROOT_SAMPLES: usize = 50;
const ROOT_MAX_DEGREE: usize = 4;
/// Inequivalence checks cover instances up to this m.
const INEQUIVALENCE_MAX_M: u32 = 10;

fn tcc(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tcc"))
        .args(args)
        .output()
        .expect("run tcc");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

fn report(id: u32, name: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("PASS criterion {id}: {name}");
    } else {
        println!("FAIL criterion {id}: {name}");
        for f in failures {
            println!("    {f}");
        }
    }
    assert!(failures.is_empty(), "criterion {id} failed: {failures:#?}");
}

struct Sweep {
    exit: i32,
    items: Vec<SweepItem>,
    files: usize,
}

fn sweep() -> &'static Sweep {
    static CELL: OnceLock<Sweep> = OnceLock::new();
    CELL.get_or_init(|| {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().to_str().unwrap();
        let max_m = SWEEP_MAX_M.to_string();
        let (exit, stdout) = tcc(&["verify", "--all", "--max-m", &max_m, "--json", "--out", out]);
        let items: Vec<SweepItem> = serde_json::from_str(&stdout).expect("sweep JSON");
        let files = std::fs::read_dir(dir.path()).unwrap().count();
        Sweep { exit, items, files }
    })
}

fn verified(s: &Sweep) -> impl Iterator<Item = (&SweepItem, &ternary_cyclic::TheoremReport)> {
    s.items.iter().filter_map(|it| match &it.outcome {
        SweepOutcome::Report(r) if r.verdict == Verdict::Verified => Some((it, r.as_ref())),
        _ => None,
    })
}

#[test]
fn criterion_1_reference_codes() {
    let expected = [
        ("[80,73,4]", "x^7+2x^6+x^5+x^3+2x+2"),
        ("[728,718,4]", "x^10+2x^9+2x^6+2x^5+2x^4+2x^3+2x^2+2x+1"),
        ("[6560,6547,4]", "x^13+2x^11+2x^10+2x^8+x^7+x^5+2x^4+2x^3+2"),
        ("[6560,6547,4]", "x^13+2x^11+2x^10+x^7+2x^3+2x^2+2x+1"),
        ("[728,716,4]", "x^12+2x^11+x^10+2x^6+2x^3+2"),
    ];
    let start = Instant::now();
    let (exit, stdout) = tcc(&["table", "--json"]);
    let elapsed = start.elapsed();
    let rows: Vec<Value> = serde_json::from_str(&stdout).expect("table JSON");
    let mut fails = Vec::new();
    if exit != 0 {
        fails.push(format!("exit code {exit}"));
    }
    if rows.len() != expected.len() {
        fails.push(format!("{} rows", rows.len()));
    }
    for (row, (params, g)) in rows.iter().zip(expected) {
        if row["parameters"] != params || row["generator"] != g {
            fails.push(format!("{}: got {} {}", row["label"], row["parameters"], row["generator"]));
        }
    }
    if elapsed > TABLE_TIME_LIMIT {
        fails.push(format!("took {elapsed:?}"));
    }
    report(1, "reference codes reproduced exactly", &fails);
}

/// `(id, m, h)` points that must come back Verified.
fn required_instances() -> Vec<(TheoremId, u32, Option<u32>)> {
    let mut v = Vec::new();
    for m in [4, 6, 8, 10, 12] {
        v.push((TheoremId::T1, m, None));
        v.push((TheoremId::C1, m, None));
    }
    for m in [4, 8, 12] {
        v.push((TheoremId::T2, m, None));
        v.push((TheoremId::C2, m, None));
    }
    for m in [6, 10] {
        v.push((TheoremId::T3, m, None));
    }
    for m in [3, 5, 7, 9, 11u32] {
        let n = pow3(m) - 1;
        for h in 1..m {
            let gcd_ok = ternary_cyclic::arith::gcd(n, pow3(h) - 2) == 1;
            let has_even = solve_linear_congruence(pow3(h) - 1, (pow3(m) + 1) / 2, n)
                .iter()
                .any(|e| e % 2 == 0);
            if gcd_ok && has_even {
                v.push((TheoremId::T4, m, Some(h)));
            }
        }
    }
    for m in [7, 11] {
        v.push((TheoremId::T5, m, None));
    }
    for m in [7, 13] {
        v.push((TheoremId::T6, m, None));
    }
    v
}

#[test]
fn criterion_2_theorem_sweep() {
    let s = sweep();
    let mut fails = Vec::new();
    if s.exit != 0 {
        fails.push(format!("exit code {}", s.exit));
    }
    if s.files != s.items.len() {
        fails.push(format!("{} report files for {} instances", s.files, s.items.len()));
    }
    for (id, m, h) in required_instances() {
        match s.items.iter().find(|it| (it.id, it.m, it.h) == (id, m, h)) {
            Some(SweepItem { outcome: SweepOutcome::Report(r), .. }) if r.verdict == Verdict::Verified => {}
            Some(it) => fails.push(format!("{id} m={m} h={h:?}: {:?}", it.outcome)),
            None => fails.push(format!("{id} m={m} h={h:?}: missing")),
        }
    }
    for it in &s.items {
        match &it.outcome {
            SweepOutcome::Report(r) if r.verdict == Verdict::Refuted => {
                fails.push(format!("{} m={} h={:?}: Refuted", it.id, it.m, it.h))
            }
            SweepOutcome::Error { message } => {
                fails.push(format!("{} m={} h={:?}: {message}", it.id, it.m, it.h))
            }
            SweepOutcome::NoInstance { .. } => {
                // Only T4 points whose congruence has no even solution.
                let h = it.h.unwrap_or(0);
                let n = pow3(it.m) - 1;
                let vacuous = it.id == TheoremId::T4
                    && !solve_linear_congruence(pow3(h) - 1, (pow3(it.m) + 1) / 2, n)
                        .iter()
                        .any(|e| e % 2 == 0);
                if !vacuous {
                    fails.push(format!("{} m={} h={:?}: unexpected NoInstance", it.id, it.m, it.h));
                }
            }
            _ => {}
        }
    }
    let vacuous: Vec<_> = s
        .items
        .iter()
        .filter(|it| matches!(it.outcome, SweepOutcome::NoInstance { .. }))
        .map(|it| (it.m, it.h.unwrap_or(0)))
        .collect();
    if vacuous != [(9, 3), (9, 6)] {
        fails.push(format!("vacuous T4 points {vacuous:?}"));
    }
    report(2, "every admissible instance Verified, none Refuted", &fails);
}

#[test]
fn criterion_3_factorization_claims() {
    let mut fails = Vec::new();
    let f = quartic_factor_printed().to_string();
    let (exit, stdout) = tcc(&["factor", "--poly", &f, "--json"]);
    let v: Value = serde_json::from_str(&stdout).expect("factor JSON");
    let got: BTreeSet<(String, u64)> = v["factorization"]["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p[0].as_str().unwrap().to_string(), p[1].as_u64().unwrap()))
        .collect();
    let want: BTreeSet<(String, u64)> = [("x-1", 5), ("x^4+x-1", 1), ("x^4-x^3-1", 1), ("x^4-x^3+x^2-x+1", 1)]
        .into_iter()
        .map(|(p, e)| (p.parse::<TritPoly>().unwrap().to_string(), e))
        .collect();
    if exit != 0 || got != want || v["factorization"]["unit"] != 1 {
        fails.push(format!("degree-17 factorization {}", v["text"]));
    }

    let c = thirteen_factor_claim().unwrap();
    let mut shape = c.computed.shape();
    shape.sort_unstable();
    let mut want_shape = vec![(1, 1), (1, 1), (1, 9), (9, 1), (9, 1)];
    want_shape.extend([(13, 1); 6]);
    want_shape.sort_unstable();
    if shape != want_shape || c.computed.product() != c.poly {
        fails.push(format!("degree-107 factorization shape {shape:?}"));
    }
    for (p, e) in [("x", 1), ("x+1", 1), ("x-1", 9), ("x^9-x^7-x^5+x^4+x^3+x^2-1", 1), ("x^9-x^7-x^6-x^5+x^4+x^2-1", 1)] {
        let p: TritPoly = p.parse().unwrap();
        if c.computed.multiplicity_of(&p) != e {
            fails.push(format!("factor {p} not of multiplicity {e}"));
        }
    }
    if c.computed.factors.iter().any(|(p, _)| !p.is_monic() || !is_irreducible(p).unwrap()) {
        fails.push("a factor is not monic irreducible".into());
    }
    report(3, "factorization claims", &fails);
}

#[test]
fn criterion_4_bound_exclusions() {
    let mut fails = Vec::new();
    let mut pairs: BTreeSet<(u64, u64)> = [(80, 73), (728, 718), (6560, 6547), (728, 716)].into();
    pairs.extend(verified(sweep()).map(|(_, r)| (r.code.n, r.code.k)));
    for (n, k) in pairs {
        if optimality_bound(n, 5, k).verdict != BoundVerdict::Excluded {
            fails.push(format!("d=5 not excluded for ({n}, {k})"));
        }
    }
    report(4, "d = 5 excluded for all reference and Verified parameters", &fails);
}

#[test]
fn criterion_5_oracle_equivalence() {
    let mut fails = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for m in 2..=ORACLE_MAX_M {
        let ctx = FieldCtx::default_for(m).unwrap();
        let n = ctx.n();
        for shape in Shape::ALL {
            for _ in 0..ORACLE_SAMPLES {
                let e = rng.gen_range(1..n);
                let code = build_code(&ctx, &shape.zeros(n, e)).unwrap();
                let oracle = find_low_weight(&code, 3, CAP).unwrap().is_some();
                let reduced = weight3_reduced(shape, &ctx, e, CAP).unwrap().low_weight_exists();
                let exact = (m <= EXACT_MAX_M)
                    .then(|| exact_min_distance(&code, DEFAULT_ENUMERATION_BUDGET).unwrap() <= 3);
                if oracle != reduced || exact.is_some_and(|x| x != oracle) {
                    fails.push(format!("{shape} m={m} e={e}: oracle {oracle} reduced {reduced} exact {exact:?}"));
                }
            }
        }
    }
    report(5, "reduced equations agree with the generic search", &fails);
}

fn monic_polys(deg: u32) -> impl Iterator<Item = TritPoly> {
    (0..pow3(deg)).map(move |mut idx| {
        let mut c: Vec<i64> = (0..deg)
            .map(|_| {
                let d = (idx % 3) as i64;
                idx /= 3;
                d
            })
            .collect();
        c.push(1);
        TritPoly::from_ints(&c)
    })
}

#[test]
fn criterion_6_property_suites() {
    let mut fails = Vec::new();
    for m in 2..=COSET_MAX_M {
        for e in 1..pow3(m) - 1 {
            if let Some(p) = coset_size_predicted(e, m) {
                let size = coset(e, m).size();
                if p.size != size {
                    fails.push(format!("m={m} e={e}: predicted {} ({}) actual {size}", p.size, p.rule));
                }
            }
        }
    }
    for r in 1..=PRODUCT_MAX_R {
        let mut prod = TritPoly::one();
        for d in (1..=r).filter(|d| r % d == 0) {
            for p in monic_polys(d).filter(|p| is_irreducible(p).unwrap()) {
                prod = &prod * &p;
            }
        }
        let want = &TritPoly::monomial(Trit::ONE, pow3(r) as usize) - &TritPoly::x();
        if prod != want {
            fails.push(format!("product of irreducibles for r={r}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut seen = 0;
    while seen < ROOT_SAMPLES {
        let r = rng.gen_range(1..=ROOT_MAX_DEGREE);
        let mut c: Vec<i64> = (0..r).map(|_| rng.gen_range(0..3)).collect();
        c.push(1);
        let f = TritPoly::from_ints(&c);
        if !is_irreducible(&f).unwrap() {
            continue;
        }
        seen += 1;
        let ctx = FieldCtx::default_for(r as u32).unwrap();
        let mut roots: Vec<FieldElem> = ctx
            .all_elements(CAP)
            .unwrap()
            .filter(|&x| eval_at(&ctx, &f, x).is_zero())
            .collect();
        roots.sort_by_key(|e| e.index());
        let Some(&x) = roots.first() else {
            fails.push(format!("{f} has no root in GF(3^{r})"));
            continue;
        };
        let mut orbit: Vec<FieldElem> = (0..r as u32).map(|k| ctx.frobenius(x, k)).collect();
        orbit.sort_by_key(|e| e.index());
        orbit.dedup();
        if orbit.len() != r || orbit != roots {
            fails.push(format!("{f}: roots do not form one orbit of size {r}"));
        }
    }
    report(6, "coset sizes, irreducible product and root orbits", &fails);
}

#[test]
fn criterion_7_inequivalence() {
    let mut fails = Vec::new();
    let mut covered = 0;
    for (it, _) in verified(sweep()) {
        let relevant = matches!(it.id, TheoremId::T1 | TheoremId::T2 | TheoremId::C1 | TheoremId::C2 | TheoremId::T3);
        if !relevant || it.m > INEQUIVALENCE_MAX_M {
            continue;
        }
        covered += 1;
        let checks = inequivalence_checks(it.id, it.m).unwrap();
        if checks.is_empty() {
            fails.push(format!("{} m={}: no checks", it.id, it.m));
        }
        for c in checks.iter().filter(|c| !c.pass()) {
            fails.push(format!("{} m={}: {} ({} vs {})", it.id, it.m, c.description, c.left, c.right));
        }
    }
    let t3 = inequivalence_checks(TheoremId::T3, 6).unwrap();
    if !coset(106, 6).contains(t3[0].left) {
        fails.push(format!("2·29^-1 = {} is not in the coset of 106", t3[0].left));
    }
    // T1 and C1 at m = 4, 6, 8, 10; T2 and C2 at 4, 8; T3 at 6, 10.
    if covered != 14 {
        fails.push(format!("{covered} instances checked, expected 14"));
    }
    report(7, "inequivalence against registry exponents", &fails);
}
