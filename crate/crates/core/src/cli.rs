//! Argument handling for the `matroid-hc` binary.
//!
//! Exit codes: 0 success, 1 a checked statement failed, 2 usage or input
//! error, 3 a resource cap left the answer open.

use std::io::Write;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::catalog::{self, Instance};
use crate::charpoly::{characteristic_polynomial, critical_exponent, CriticalExponent};
use crate::error::Error;
use crate::hc::{check_rainbow_free, hc, Partition, SearchConfig, DEFAULT_NODE_LIMIT};
use crate::hypergraph::{view, Family};
use crate::matroid::MatroidExchange;
use crate::theorems::{
    default_instances, explore_cp_conjecture, verify, TheoremId, VerificationReport, VerifyOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

const SPEC_HELP: &str = "\
Matroid specs:
  uniform:r,n         uniform matroid U_{r,n}
  free:n              free matroid U_{n,n}
  graph:K5 | graph:W4 | graph:C6
                      complete graph, wheel, cycle
  pg:r,q              rank-r projective geometry PG(r-1,q), q a prime power <= 32
  ag:d,q              affine geometry AG(d,q)
  steiner:NAME        S(2,3,7), S(2,3,9), S(2,3,13) or S(3,4,8)
  file:PATH           exchange JSON, circuit or linear form

Families:
  circuits | cocircuits | bases | pcircuits:p | hamiltonian | flats:p";

#[derive(Debug, Parser)]
#[command(name = "matroid-hc", version, about = "Exact heterochromatic numbers of matroid hypergraphs", after_help = SPEC_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Worker threads for the search.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    timeout: Option<f64>,
    /// Search node limit.
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    node_limit: u64,
}

impl SearchArgs {
    fn config(&self) -> Result<SearchConfig, Error> {
        let timeout = match self.timeout {
            Some(t) if !(t.is_finite() && t > 0.0) => {
                return Err(Error::Parse(format!("timeout must be a positive number of seconds, got {t}")))
            }
            Some(t) => Some(Duration::from_secs_f64(t)),
            None => None,
        };
        Ok(SearchConfig { threads: self.threads.max(1), node_limit: self.node_limit, timeout })
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a matroid and summarize it.
    Build {
        #[arg(long)]
        matroid: String,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Heterochromatic number of a matroid hypergraph.
    Hc {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        family: String,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
        /// Check a partition instead of searching: inline JSON (a block list
        /// or earlier `hc` output) or a path to a file holding it.
        #[arg(long)]
        check_witness: Option<String>,
    },
    /// Compare a theorem's formula with the exact engine.
    Verify {
        #[arg(long)]
        theorem: String,
        /// Matroid specs; repeat the flag or separate with ';'. Defaults to the theorem's standard range.
        #[arg(long)]
        params: Vec<String>,
        /// Fix p for theorems that take it.
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Compare a conjecture with the exact engine.
    Explore {
        #[arg(long)]
        conjecture: String,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: u32,
        /// Exit with status 1 when the conjecture disagrees.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Characteristic polynomial and critical exponent.
    Charpoly {
        #[arg(long)]
        matroid: String,
        /// Evaluate at an integer or at a power written `q^c`.
        #[arg(long)]
        eval: Option<String>,
        /// Critical exponent over GF(q).
        #[arg(long)]
        critical: Option<u64>,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Inconclusive { .. } | Error::ResourceCap(_) => EXIT_INCONCLUSIVE,
            Error::Counterexample(_) | Error::Internal(_) => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

type CmdResult = Result<i32, Failure>;

/// Runs with process stdout and stderr.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// Runs with the given output streams. `argv[0]` is the program name.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Build { matroid, output } => cmd_build(&matroid, output, out),
        Command::Hc { matroid, family, search, output, check_witness } => {
            cmd_hc(&matroid, &family, &search, output, check_witness.as_deref(), out)
        }
        Command::Verify { theorem, params, p, seed, search, output } => {
            cmd_verify(&theorem, &params, p, seed, &search, output, out)
        }
        Command::Explore { conjecture, p, r, q, strict, search, output } => {
            cmd_explore(&conjecture, p, r, q, strict, &search, output, out)
        }
        Command::Charpoly { matroid, eval, critical, output } => {
            cmd_charpoly(&matroid, eval.as_deref(), critical, output, out)
        }
    }
}

fn no_csv(cmd: &str, output: Output) -> Result<(), Failure> {
    if output == Output::Csv {
        return Err(Failure { code: EXIT_USAGE, message: format!("{cmd} has no csv output") });
    }
    Ok(())
}

fn print_json(out: &mut dyn Write, v: &Value) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string(v).map_err(Error::from)?)?;
    Ok(())
}

fn cmd_build(spec: &str, output: Output, out: &mut dyn Write) -> CmdResult {
    no_csv("build", output)?;
    let Instance { label, matroid: m, .. } = catalog::build(spec)?;
    let circuits = m.circuits().len();
    match output {
        Output::Json => print_json(
            out,
            &json!({
                "matroid": label,
                "n": m.n(),
                "rank": m.rank(),
                "circuits": circuits,
                "simple": m.is_simple(),
                "paving": m.is_paving(),
                "binary": m.is_binary(),
                "exchange": MatroidExchange::from_matroid(&m),
            }),
        )?,
        _ => {
            writeln!(out, "{label}: n = {}, rank = {}", m.n(), m.rank())?;
            writeln!(out, "circuits: {circuits}")?;
            writeln!(out, "simple: {}, paving: {}, binary: {}", m.is_simple(), m.is_paving(), m.is_binary())?;
        }
    }
    Ok(EXIT_OK)
}

fn load_partition(arg: &str) -> Result<Partition, Error> {
    let text = if arg.trim_start().starts_with(['[', '{']) {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)?
    };
    let value: Value = serde_json::from_str(&text)?;
    let blocks = match value {
        Value::Object(mut o) => {
            o.remove("witness").ok_or_else(|| Error::Parse("JSON object has no \"witness\"".into()))?
        }
        v => v,
    };
    Ok(serde_json::from_value(blocks)?)
}

fn cmd_hc(
    spec: &str,
    family: &str,
    search: &SearchArgs,
    output: Output,
    check: Option<&str>,
    out: &mut dyn Write,
) -> CmdResult {
    no_csv("hc", output)?;
    let family: Family = family.parse()?;
    let cfg = search.config()?;
    let inst = catalog::build(spec)?;
    let h = view(&inst.matroid, family)?;

    if let Some(arg) = check {
        let p = load_partition(arg)?;
        let ok = check_rainbow_free(&h, &p);
        match output {
            Output::Json => print_json(out, &json!({"rainbow_free": ok, "blocks": p.block_count()}))?,
            _ => writeln!(out, "{}", if ok { "rainbow-free" } else { "rainbow edge found" })?,
        }
        return Ok(if ok { EXIT_OK } else { EXIT_MISMATCH });
    }

    let start = Instant::now();
    let res = hc(&h, &cfg)?;
    let ms = start.elapsed().as_millis();
    match output {
        Output::Json => {
            let value = match res.value.value() {
                Some(v) => json!(v),
                None => json!("no_hyperedges"),
            };
            print_json(
                out,
                &json!({"hc": value, "witness": res.witness, "nodes": res.stats.nodes, "ms": ms}),
            )?;
        }
        _ => writeln!(out, "{}", res.value)?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    theorem: &str,
    params: &[String],
    p: Option<usize>,
    seed: u64,
    search: &SearchArgs,
    output: Output,
    out: &mut dyn Write,
) -> CmdResult {
    let id: TheoremId = theorem.parse()?;
    let opts = VerifyOptions { search: search.config()?, p, seed, ..VerifyOptions::default() };
    let specs: Vec<&str> =
        params.iter().flat_map(|s| s.split(';')).map(str::trim).filter(|s| !s.is_empty()).collect();
    let reports: Vec<VerificationReport> = if specs.is_empty() {
        let mut reports = Vec::new();
        for (inst, p) in default_instances(id)? {
            reports.push(crate::theorems::verify_instance(id, &inst, p.or(opts.p), &opts)?);
        }
        reports
    } else {
        let instances = specs.iter().map(|s| catalog::build(s)).collect::<Result<Vec<_>, _>>()?;
        verify(id, &instances, &opts)?
    };

    match output {
        Output::Csv => {
            writeln!(out, "{}", VerificationReport::CSV_HEADER)?;
            for r in &reports {
                writeln!(out, "{}", r.csv_row())?;
            }
        }
        Output::Json => print_json(out, &serde_json::to_value(&reports).map_err(Error::from)?)?,
        Output::Text => {
            writeln!(out, "{id}: {}", id.statement())?;
            for r in &reports {
                let verdict = match r.matched {
                    Some(true) => "ok",
                    Some(false) => "MISMATCH",
                    None => "inconclusive",
                };
                let oracle = r.oracle.as_deref().unwrap_or("?");
                writeln!(
                    out,
                    "  {:<28} predicted {:<6} oracle {:<6} {verdict}",
                    r.params,
                    r.predicted.to_string(),
                    oracle
                )?;
            }
        }
    }
    if reports.iter().any(|r| r.matched == Some(false)) {
        Ok(EXIT_MISMATCH)
    } else if reports.iter().any(|r| r.matched.is_none()) {
        Ok(EXIT_INCONCLUSIVE)
    } else {
        Ok(EXIT_OK)
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_explore(
    conjecture: &str,
    p: usize,
    r: usize,
    q: u32,
    strict: bool,
    search: &SearchArgs,
    output: Output,
    out: &mut dyn Write,
) -> CmdResult {
    no_csv("explore", output)?;
    if conjecture.parse::<TheoremId>()? != TheoremId::CpConjecture {
        return Err(Failure { code: EXIT_USAGE, message: format!("{conjecture} is not a conjecture") });
    }
    let rep = explore_cp_conjecture(p, r, q, &search.config()?)?;
    match output {
        Output::Json => {
            let mut v = serde_json::to_value(&rep).map_err(Error::from)?;
            v["verdict"] = json!(rep.verdict());
            print_json(out, &v)?;
        }
        _ => writeln!(out, "{rep}")?,
    }
    Ok(if rep.oracle.is_none() {
        EXIT_INCONCLUSIVE
    } else if strict && rep.discrepancy {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    })
}

fn parse_eval(s: &str) -> Result<BigInt, Error> {
    let bad = || Error::Parse(format!("--eval expects an integer or q^c, got {s:?}"));
    match s.split_once('^') {
        Some((b, e)) => {
            let base: BigInt = b.trim().parse().map_err(|_| bad())?;
            let exp: u32 = e.trim().parse().map_err(|_| bad())?;
            Ok(base.pow(exp))
        }
        None => s.trim().parse().map_err(|_| bad()),
    }
}

fn big_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn cmd_charpoly(
    spec: &str,
    eval: Option<&str>,
    critical: Option<u64>,
    output: Output,
    out: &mut dyn Write,
) -> CmdResult {
    no_csv("charpoly", output)?;
    let point = eval.map(parse_eval).transpose()?;
    let inst = catalog::build(spec)?;
    let chi = characteristic_polynomial(&inst.matroid)?;
    let crit = critical.map(|q| critical_exponent(&inst.matroid, q)).transpose()?;
    match output {
        Output::Json => {
            let mut v = json!({"coeffs": chi.coeffs().iter().map(big_json).collect::<Vec<_>>()});
            if let Some(c) = crit {
                v["critical"] = match c {
                    CriticalExponent::Finite(c) => json!(c),
                    CriticalExponent::Infinite => json!("inf"),
                };
            }
            if let Some(x) = &point {
                v["eval"] = big_json(&chi.eval(x));
            }
            print_json(out, &v)?;
        }
        _ => {
            writeln!(out, "χ(λ) = {chi}")?;
            if let (Some(x), Some(s)) = (&point, eval) {
                writeln!(out, "χ({s}) = {}", chi.eval(x))?;
            }
            if let (Some(c), Some(q)) = (crit, critical) {
                writeln!(out, "critical exponent (q = {q}): {c}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("matroid-hc").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn hc_text() {
        let (code, out, _) = run_capture(&["hc", "--matroid", "pg:3,2", "--family", "circuits"]);
        assert_eq!((code, out.trim()), (0, "4"));
        let (code, out, _) = run_capture(&["hc", "--matroid", "uniform:4,4", "--family", "circuits"]);
        assert_eq!((code, out.trim()), (0, "no_hyperedges"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["hc", "--matroid", "pg:3,2", "--family", "cycles"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["hc", "--matroid", "torus:3", "--family", "circuits"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn eval_parsing() {
        assert_eq!(parse_eval("2^3").unwrap(), BigInt::from(8));
        assert_eq!(parse_eval("-5").unwrap(), BigInt::from(-5));
        assert!(parse_eval("2^x").is_err());
    }
}
