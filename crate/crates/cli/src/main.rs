use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use ternary_cyclic::cosets::{coset, coset_size_predicted};
use ternary_cyclic::distance::{
    exact_min_distance, find_low_weight, optimality_bound, weight3_reduced, Shape,
    DEFAULT_ENUMERATION_BUDGET,
};
use ternary_cyclic::field::{DEFAULT_EXHAUSTIVE_CAP, MAX_DEGREE};
use ternary_cyclic::golden::{check_reference, REFERENCE_CODES};
use ternary_cyclic::polyf3::{factor, DEFAULT_SEED};
use ternary_cyclic::theorems::{sweep, verify, SweepOutcome, TheoremId, Verdict, VerifyOptions};
use ternary_cyclic::{build_code, minimal_poly, Error, FieldCtx, FieldSpec, TritPoly};

#[derive(Parser, Debug)]
#[command(name = "tcc", version, about = "Ternary cyclic code construction and verification")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Global {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized factorization.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Allow exhaustive scans above the default degree cap.
    #[arg(long, global = true)]
    force_large: bool,
    /// Largest extension degree for exhaustive scans.
    #[arg(long, global = true)]
    cap: Option<u32>,
    /// Directory for per-instance report files.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Cyclotomic coset of j modulo 3^m - 1.
    Coset {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        j: u64,
    },
    /// Minimal polynomial of α^i.
    Minpoly {
        #[arg(long)]
        field: String,
        #[arg(long)]
        i: u64,
    },
    /// Generator polynomial and parameters of a cyclic code.
    Gencode {
        #[arg(long)]
        field: String,
        #[arg(long, value_delimiter = ',', required = true)]
        zeros: Vec<u64>,
    },
    /// Low-weight codewords or the exact minimum distance.
    Mindist(MindistArgs),
    /// Whether 3^k exceeds the upper bound on codes of length n, distance d.
    Bound {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        k: u64,
    },
    /// Factor a polynomial over F_3.
    Factor {
        #[arg(long)]
        poly: String,
    },
    /// Verify one theorem instance or sweep all of them.
    Verify(VerifyArgs),
    /// Rebuild the reference codes and compare with the expected output.
    Table,
}

#[derive(Args, Debug)]
struct MindistArgs {
    #[arg(long)]
    field: String,
    #[arg(long, value_delimiter = ',', required = true)]
    zeros: Vec<u64>,
    /// Generic low-weight search (default).
    #[arg(long, conflicts_with_all = ["reduced", "exact"])]
    oracle: bool,
    /// One-variable equation scan for the zero set's shape.
    #[arg(long, conflicts_with = "exact")]
    reduced: bool,
    /// Exact minimum distance by enumeration.
    #[arg(long)]
    exact: bool,
    #[arg(long, default_value_t = 3)]
    max_weight: u32,
    /// Candidate budget for --exact.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    budget: u64,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    theorem: Option<String>,
    #[arg(long, required_unless_present = "all")]
    m: Option<u32>,
    /// Parameter h of the T4 family.
    #[arg(long)]
    h: Option<u32>,
    /// Modulus to use instead of the default one.
    #[arg(long)]
    modulus: Option<String>,
    /// Accept any even m for T3 (reported as exploratory).
    #[arg(long)]
    relaxed: bool,
    /// Sweep every family instance up to --max-m.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 13, requires = "all")]
    max_m: u32,
}

/// Errors caused by the invocation rather than the computation.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

/// Input parsing and range problems are usage errors.
fn input<T>(r: ternary_cyclic::Result<T>) -> anyhow::Result<T> {
    r.map_err(|e| match e {
        Error::Parse(_) | Error::InvalidArgument(_) | Error::CapExceeded { .. } | Error::DegreeOutOfRange(_) => {
            usage(e.to_string())
        }
        other => other.into(),
    })
}

fn parse_poly(s: &str) -> anyhow::Result<TritPoly> {
    input(s.parse::<TritPoly>())
}

fn field(s: &str) -> anyhow::Result<FieldCtx> {
    input(FieldSpec::parse(s).and_then(|f| f.build()))
}

fn emit<T: Serialize>(g: &Global, value: &T, text: impl FnOnce() -> String) -> anyhow::Result<()> {
    if g.json {
        println!("{}", serde_json::to_string_pretty(value)?);
    } else {
        print!("{}", text());
    }
    Ok(())
}

fn cap(g: &Global) -> anyhow::Result<u32> {
    match (g.cap, g.force_large) {
        (Some(c), false) if c > DEFAULT_EXHAUSTIVE_CAP => Err(usage(format!(
            "--cap {c} exceeds {DEFAULT_EXHAUSTIVE_CAP}; pass --force-large to allow it"
        ))),
        (Some(c), _) => Ok(c),
        (None, true) => Ok(MAX_DEGREE),
        (None, false) => Ok(DEFAULT_EXHAUSTIVE_CAP),
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let g = &cli.global;
    if let Some(j) = g.jobs {
        if j == 0 {
            return Err(usage("--jobs must be positive"));
        }
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global()?;
    }
    let cap = cap(g)?;
    match &cli.cmd {
        Cmd::Coset { m, j } => {
            if *m == 0 || *m > MAX_DEGREE {
                return Err(usage(format!("m must lie in 1..={MAX_DEGREE}")));
            }
            let c = coset(*j, *m);
            let predicted = coset_size_predicted(*j, *m);
            #[derive(Serialize)]
            struct Out<'a> {
                coset: &'a ternary_cyclic::cosets::Coset,
                size: u32,
                predicted: Option<ternary_cyclic::cosets::SizePrediction>,
            }
            let out = Out { coset: &c, size: c.size(), predicted };
            emit(g, &out, || {
                let p = match predicted {
                    Some(p) => format!("{} ({})", p.size, p.rule),
                    None => "none".into(),
                };
                format!(
                    "members: {:?}\nleader: {}\nsize: {}\npredicted: {p}\n",
                    c.members, c.leader, c.size()
                )
            })?;
        }
        Cmd::Minpoly { field: f, i } => {
            let ctx = field(f)?;
            let p = minimal_poly(&ctx, *i)?;
            #[derive(Serialize)]
            struct Out<'a> {
                modulus: &'a TritPoly,
                i: u64,
                poly: &'a TritPoly,
                machine: String,
            }
            let out = Out { modulus: ctx.modulus(), i: *i, poly: &p, machine: p.to_machine() };
            emit(g, &out, || format!("{p}\n{}\n", p.to_machine()))?;
        }
        Cmd::Gencode { field: f, zeros } => {
            let ctx = field(f)?;
            let code = input(build_code(&ctx, zeros))?;
            let s = code.summary();
            emit(g, &s, || {
                let mut t = format!(
                    "modulus: {}\nn = {}, k = {}\ngenerator: {}\nmachine: {}\n",
                    s.modulus,
                    s.n,
                    s.k,
                    s.generator,
                    s.generator.to_machine()
                );
                for c in code.cosets() {
                    t += &format!("coset {} (size {}): {:?}\n", c.leader, c.size(), c.members);
                }
                if s.collapsed {
                    t += "note: some zeros shared a coset\n";
                }
                t
            })?;
        }
        Cmd::Mindist(a) => mindist(g, a, cap)?,
        Cmd::Bound { n, d, k } => {
            if *d == 0 || *d > *n || *k > *n {
                return Err(usage("need 1 <= d <= n and k <= n"));
            }
            let r = optimality_bound(*n, *d, *k);
            emit(g, &r, || {
                format!(
                    "{}\nbound = {} (t = {}, r = {})\n3^k = {}\n",
                    r.verdict, r.bound, r.t, r.r, r.code_size
                )
            })?;
        }
        Cmd::Factor { poly } => {
            let p = parse_poly(poly)?;
            let f = input(factor(&p, g.seed))?;
            #[derive(Serialize)]
            struct Out<'a> {
                poly: &'a TritPoly,
                factorization: &'a ternary_cyclic::Factorization,
                text: String,
            }
            let out = Out { poly: &p, factorization: &f, text: f.to_string() };
            emit(g, &out, || format!("{f}\n"))?;
        }
        Cmd::Verify(a) => return verify_cmd(g, a, cap),
        Cmd::Table => {
            let rows = REFERENCE_CODES
                .iter()
                .map(|r| check_reference(r, cap))
                .collect::<ternary_cyclic::Result<Vec<_>>>()?;
            let ok = rows.iter().all(|r| r.pass);
            emit(g, &rows, || {
                let mut t = String::new();
                for r in &rows {
                    t += &format!(
                        "{:<20} {:<18} g = {:<45} {}\n",
                        r.label,
                        r.parameters,
                        r.generator,
                        if r.pass { "PASS" } else { "FAIL" }
                    );
                    if !r.pass {
                        t += &format!(
                            "{:<20} expected {:<9} g = {}\n",
                            "", r.expected_parameters, r.expected_generator
                        );
                    }
                }
                t
            })?;
            return Ok(ok);
        }
    }
    Ok(true)
}

fn mindist(g: &Global, a: &MindistArgs, cap: u32) -> anyhow::Result<()> {
    let ctx = field(&a.field)?;
    let code = input(build_code(&ctx, &a.zeros))?;
    if a.exact {
        let d = match exact_min_distance(&code, a.budget) {
            Err(Error::BudgetExceeded { needed, budget, lower_bound }) => {
                #[derive(Serialize)]
                struct Out {
                    budget_exceeded: bool,
                    lower_bound: u64,
                    needed: u128,
                    budget: u64,
                }
                let out = Out { budget_exceeded: true, lower_bound, needed, budget };
                return emit(g, &out, || format!("budget {budget} exhausted; d >= {lower_bound}\n"));
            }
            other => input(other)?,
        };
        #[derive(Serialize)]
        struct Out {
            n: u64,
            k: u64,
            d: u64,
        }
        let out = Out { n: code.n(), k: code.k(), d };
        return emit(g, &out, || format!("[{}, {}, {d}]\n", code.n(), code.k()));
    }
    if a.reduced {
        let Some((shape, e)) = Shape::classify(code.zeros(), code.n()) else {
            return Err(usage(
                "--reduced needs zeros of the form {0,1,e}, {1,e,(3^m-1)/2}, {1,e} or {2,e}",
            ));
        };
        let outcome = input(weight3_reduced(shape, &ctx, e, cap))?;
        #[derive(Serialize)]
        struct Out {
            shape: String,
            e: u64,
            outcome: ternary_cyclic::distance::ReducedOutcome,
            low_weight_exists: bool,
        }
        let out = Out { shape: shape.to_string(), e, outcome, low_weight_exists: outcome.low_weight_exists() };
        return emit(g, &out, || {
            let what = match outcome {
                ternary_cyclic::distance::ReducedOutcome::NoSolution => "no solution: no word of weight <= 3".to_string(),
                ternary_cyclic::distance::ReducedOutcome::ParityFail => "parity of e gives a word of weight 2".to_string(),
                ternary_cyclic::distance::ReducedOutcome::Solution { x, equation } => {
                    format!("{equation} holds at x = {}", ctx.describe(x))
                }
            };
            format!("{shape} with e = {e}: {what}\n")
        });
    }
    let w = input(find_low_weight(&code, a.max_weight, cap))?;
    #[derive(Serialize)]
    struct Out<'a> {
        n: u64,
        k: u64,
        max_weight: u32,
        witness: &'a Option<ternary_cyclic::distance::WeightWitness>,
        word: Option<TritPoly>,
    }
    let out = Out { n: code.n(), k: code.k(), max_weight: a.max_weight, witness: &w, word: w.as_ref().map(|w| w.to_poly()) };
    emit(g, &out, || match &w {
        Some(w) => format!("weight {} word: {}\n", w.weight, w.to_poly()),
        None => format!("no nonzero word of weight <= {}\n", a.max_weight),
    })
}

fn instance_file(dir: &Path, id: TheoremId, m: u32, h: Option<u32>) -> PathBuf {
    match h {
        Some(h) => dir.join(format!("{id}-m{m}-h{h}.json")),
        None => dir.join(format!("{id}-m{m}.json")),
    }
}

fn verify_cmd(g: &Global, a: &VerifyArgs, cap: u32) -> anyhow::Result<bool> {
    if let Some(dir) = &g.out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    if a.all {
        if a.max_m > cap {
            return Err(usage(format!("--max-m {} exceeds the scan cap {cap}", a.max_m)));
        }
        let opts = VerifyOptions { cap, field: None, relaxed: false };
        let items = sweep(a.max_m, &opts);
        if let Some(dir) = &g.out {
            for it in &items {
                let path = instance_file(dir, it.id, it.m, it.h);
                fs::write(&path, serde_json::to_string_pretty(it)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
        }
        let refuted = items.iter().any(|it| {
            matches!(&it.outcome, SweepOutcome::Report(r) if r.verdict == Verdict::Refuted)
                || (it.admissible && matches!(it.outcome, SweepOutcome::Error { .. }))
        });
        emit(g, &items, || {
            let mut t = format!(
                "{:<4} {:>3} {:>3} {:>8} {:<28} {:<16} {}\n",
                "id", "m", "h", "e", "[n, k, d]", "verdict", "note"
            );
            for it in &items {
                let h = it.h.map_or("-".into(), |h| h.to_string());
                let note = if it.admissible { "" } else { "outside optimality condition" };
                let line = match &it.outcome {
                    SweepOutcome::Report(r) => format!(
                        "{:<4} {:>3} {:>3} {:>8} {:<28} {:<16} {note}",
                        it.id.to_string(),
                        it.m,
                        h,
                        r.e,
                        r.parameters(),
                        r.verdict.to_string()
                    ),
                    SweepOutcome::NoInstance { reason } => format!(
                        "{:<4} {:>3} {:>3} {:>8} {:<28} {:<16} {reason}",
                        it.id.to_string(),
                        it.m,
                        h,
                        "-",
                        "-",
                        "NoInstance"
                    ),
                    SweepOutcome::Error { message } => format!(
                        "{:<4} {:>3} {:>3} {:>8} {:<28} {:<16} {message}",
                        it.id.to_string(),
                        it.m,
                        h,
                        "-",
                        "-",
                        "Error"
                    ),
                };
                t += line.trim_end();
                t += "\n";
            }
            t
        })?;
        return Ok(!refuted);
    }

    let id: TheoremId = input(a.theorem.as_deref().unwrap_or_default().parse())?;
    let m = a.m.expect("required by clap");
    let field = match &a.modulus {
        Some(s) => Some(input(FieldCtx::new(&parse_poly(s)?))?),
        None => None,
    };
    if id.takes_h() && a.h.is_none() {
        return Err(usage("T4 needs --h"));
    }
    if !id.takes_h() && a.h.is_some() {
        return Err(usage(format!("{id} takes no --h")));
    }
    let opts = VerifyOptions { cap, field, relaxed: a.relaxed };
    let r = input(verify(id, m, a.h, &opts))?;
    if let Some(dir) = &g.out {
        let path = instance_file(dir, id, m, a.h);
        fs::write(&path, serde_json::to_string_pretty(&r)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    emit(g, &r, || {
        let mut t = format!("{id} m={m}");
        if let Some(h) = r.h {
            t += &format!(" h={h}");
        }
        t += &format!(": e = {}", r.e);
        if let Some(s) = r.s {
            t += &format!(", s = {s}");
        }
        t += &format!("\nzeros {:?}, generator {}\n", r.code.zeros, r.code.generator);
        for c in &r.hypothesis_checks {
            t += &format!("  [{}] {}: {}\n", if c.pass { "ok" } else { "FAIL" }, c.name, c.detail);
        }
        t += &format!(
            "  k = {} (expected {}), weight <= 3 word: {}, reduced check agrees: {}\n",
            r.code.k,
            r.expected_k,
            r.weight3_witness.as_ref().map_or("none".into(), |w| w.to_poly().to_string()),
            r.reduced_agrees
        );
        t += &format!("  d = 5 bound: {}\n", r.optimality.verdict);
        t += &format!("{} {}{}\n", r.parameters(), r.verdict, if r.exploratory { " (exploratory)" } else { "" });
        t
    })?;
    Ok(r.verdict != Verdict::Refuted)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
