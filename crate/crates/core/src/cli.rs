//! Command-line front end: `compute`, `gen`, `verify`, `scan`, `correlate`.
//!
//! Exit status is 0 on success, 1 when a check or expectation fails, 2 on
//! usage or input errors and 3 when a size guard refuses the request.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::count::{core_index, f_vector, largest_block, subgraph_core, Count, BLOCK_GUARD};
use crate::error::{Error, Guard};
use crate::extremal::{self, Mode, Scan, Side, VerifyOptions, SCHEMA_VERSION};
use crate::families::{FamilySpec, GraphClass, IndexedClass};
use crate::format::{from_edge_list_text, from_graph6, to_graph6};
use crate::graph::Graph;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_GUARD: u8 = 3;

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "CORE_INDEX_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "coreindex", version, about = "Count connected subgraphs, build extremal families, scan classes and verify extremal bounds")]
struct Cli {
    /// Worker threads for scans and checks; 0 uses every core.
    #[arg(long, global = true, env = WORKERS_ENV, default_value_t = 0)]
    workers: usize,
    /// Lift size guards. A cost estimate goes to standard error first.
    #[arg(long, global = true)]
    unsafe_size: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact counts for one graph.
    Compute(ComputeArgs),
    /// Build family members and print them as graph6.
    Gen(GenArgs),
    /// Run registered checks and stream their results.
    Verify(VerifyArgs),
    /// Exhaustive extremes of F over a class at one order.
    Scan(ScanArgs),
    /// Rank correlation between F and the Wiener index over a class.
    Correlate(CorrelateArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum What {
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "fv", alias = "f_v")]
    Fv,
    Core,
    Wiener,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    /// Graph in graph6.
    #[arg(long, conflicts_with = "edges", required_unless_present = "edges")]
    g6: Option<String>,
    /// Edge-list file (`n m` header, then `u v` lines); `-` reads standard input.
    #[arg(long)]
    edges: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "all")]
    what: What,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct GenArgs {
    /// Family members such as `lollipop:n=9,g=4` or `dumbbell:m1=3,m2=3,n=8`.
    #[arg(required = true)]
    specs: Vec<String>,
    /// Also print the closed-form value, the computed value and whether they match.
    #[arg(long = "expect-F", alias = "expect-f")]
    expect_f: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Check ids, or `all`.
    ids: Vec<String>,
    /// List the registered checks and exit.
    #[arg(long)]
    list: bool,
    /// Orders to cover: `7`, `5..9` or `5..=9` (both inclusive).
    #[arg(long, value_parser = parse_range)]
    n: Option<RangeInclusive<usize>>,
    /// Single component or pendant count.
    #[arg(long)]
    k: Option<usize>,
    /// Largest tree order to enumerate.
    #[arg(long)]
    max_n_trees: Option<usize>,
    /// Random instances per sampled check.
    #[arg(long, default_value_t = 200)]
    cases: usize,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct ScanArgs {
    /// Class name, e.g. `trees`, `unicyclic`, `pendants:2`, `pendant-free`.
    #[arg(long)]
    class: GraphClass,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "both")]
    mode: Mode,
    /// Expected extremizers as `min=SPEC` or `max=SPEC`; repeatable.
    #[arg(long, value_parser = parse_expectation)]
    expect: Vec<(Side, FamilySpec)>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct CorrelateArgs {
    #[arg(long, default_value = "trees")]
    class: GraphClass,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a nonnegative integer"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let a = num(s)?;
            (a, a)
        }
    };
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(a..=b)
}

fn parse_expectation(s: &str) -> std::result::Result<(Side, FamilySpec), String> {
    let (side, spec) = s.split_once('=').ok_or("expected `min=SPEC` or `max=SPEC`")?;
    let side = match side {
        "min" => Side::Min,
        "max" => Side::Max,
        other => return Err(format!("unknown side `{other}`")),
    };
    Ok((side, spec.parse().map_err(|e: Error| e.to_string())?))
}

/// Why a command stopped early.
enum Stop {
    Failed,
    Usage(String),
    Guard(String),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeGuard { .. } => Stop::Guard(e.to_string()),
            _ => Stop::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Stop {
    fn from(e: std::io::Error) -> Self {
        Stop::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Stop>;

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Parses `args` (program name first) and runs the command, writing reports
/// to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let guard = if cli.unsafe_size { Guard::Lifted } else { Guard::Enforced };
    let mut io = Io { out, err };
    let result = match &cli.command {
        Command::Compute(a) => compute(a, guard, &mut io),
        Command::Gen(a) => generate(a, &mut io),
        Command::Verify(a) => verify(a, guard, cli.workers, &mut io),
        Command::Scan(a) => scan(a, guard, cli.workers, &mut io),
        Command::Correlate(a) => correlate(a, guard, cli.workers, &mut io),
    };
    let _ = io.out.flush();
    match result {
        Ok(()) => EXIT_OK,
        Err(Stop::Failed) => EXIT_FAILED,
        Err(Stop::Usage(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Stop::Guard(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_GUARD
        }
    }
}

/// Entry point for the binary.
pub fn main() -> std::process::ExitCode {
    let code = run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::ExitCode::from(code)
}

fn json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("reports serialize");
    serde_json::to_string_pretty(&v).expect("values print")
}

fn counts(values: &[Count]) -> Vec<String> {
    values.iter().map(Count::to_string).collect()
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ComputeReport {
    schema_version: u32,
    graph6: String,
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    core_index: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    f_vector: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    core: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wiener: Option<String>,
}

fn read_graph(a: &ComputeArgs) -> std::result::Result<Graph, Stop> {
    if let Some(g6) = &a.g6 {
        return Ok(from_graph6(g6.trim())?);
    }
    let path = a.edges.as_ref().expect("clap requires one input");
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Stop::Usage(format!("{}: {e}", path.display())))?
    };
    Ok(from_edge_list_text(&text)?)
}

fn compute(a: &ComputeArgs, guard: Guard, io: &mut Io) -> Outcome {
    let g = read_graph(a)?;
    let b = largest_block(&g);
    if guard == Guard::Lifted && b > BLOCK_GUARD {
        writeln!(
            io.err,
            "estimate: largest block has {b} vertices; about 3^{b} = {} table steps per vertex query",
            3f64.powi(b as i32) as u128
        )?;
    }
    guard.check("compute", b, BLOCK_GUARD)?;
    let want = |w: What| a.what == w || a.what == What::All;
    let mut report = ComputeReport {
        schema_version: SCHEMA_VERSION,
        graph6: to_graph6(&g),
        n: g.n(),
        m: g.m(),
        core_index: None,
        f_vector: None,
        core: None,
        wiener: None,
    };
    if want(What::F) {
        report.core_index = Some(core_index(&g).to_string());
    }
    if want(What::Fv) {
        report.f_vector = Some(counts(&f_vector(&g)?));
    }
    if want(What::Core) {
        match subgraph_core(&g) {
            Ok(core) => report.core = Some(core.to_vec()),
            Err(e) if a.what == What::All => writeln!(io.err, "core skipped: {e}")?,
            Err(e) => return Err(e.into()),
        }
    }
    if want(What::Wiener) {
        match g.wiener_index() {
            Ok(w) => report.wiener = Some(w.to_string()),
            Err(e) if a.what == What::All => writeln!(io.err, "wiener skipped: {e}")?,
            Err(e) => return Err(e.into()),
        }
    }
    match a.format {
        Format::Json => writeln!(io.out, "{}", json(&report))?,
        Format::Text | Format::Csv => {
            writeln!(io.out, "graph6: {}", report.graph6)?;
            writeln!(io.out, "n: {}  m: {}", report.n, report.m)?;
            if let Some(f) = &report.core_index {
                writeln!(io.out, "F: {f}")?;
            }
            if let Some(fv) = &report.f_vector {
                writeln!(io.out, "f: {}", fv.join(" "))?;
            }
            if let Some(core) = &report.core {
                let list: Vec<String> = core.iter().map(usize::to_string).collect();
                writeln!(io.out, "core: {}", list.join(" "))?;
            }
            if let Some(w) = &report.wiener {
                writeln!(io.out, "wiener: {w}")?;
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct GenRow {
    family: String,
    graph6: String,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    computed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
}

fn generate(a: &GenArgs, io: &mut Io) -> Outcome {
    let mut all_match = true;
    let mut rows = Vec::new();
    for text in &a.specs {
        let spec: FamilySpec = text.parse()?;
        let g = spec.build()?;
        let mut row = GenRow {
            family: spec.to_string(),
            graph6: to_graph6(&g),
            edges: g.edges(),
            formula: None,
            computed: None,
            matches: None,
        };
        if a.expect_f {
            let computed = core_index(&g);
            let formula = spec.expected_core_index();
            let ok = formula.as_ref() == Some(&computed);
            all_match &= ok;
            row.formula = formula.map(|f| f.to_string());
            row.computed = Some(computed.to_string());
            row.matches = Some(ok);
        }
        rows.push(row);
    }
    match a.format {
        Format::Json => writeln!(io.out, "{}", json(&rows))?,
        Format::Text | Format::Csv => {
            for r in &rows {
                writeln!(io.out, "{}", r.graph6)?;
                if let (Some(computed), Some(ok)) = (&r.computed, r.matches) {
                    let formula = r.formula.as_deref().unwrap_or("none");
                    let verdict = if ok { "match" } else { "MISMATCH" };
                    writeln!(io.out, "{}: formula {formula}, computed {computed}, {verdict}", r.family)?;
                }
            }
        }
    }
    if all_match {
        Ok(())
    } else {
        Err(Stop::Failed)
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

/// Members each exhaustive class would visit at the requested orders.
fn verify_estimate(opts: &VerifyOptions) -> String {
    let range = opts.n.clone().unwrap_or(1..=9);
    let mut s = String::from("estimate: guards lifted; exhaustive classes at the requested orders visit");
    for n in range {
        let trees = if n >= 2 { (n as f64).powi(n as i32 - 2) } else { 1.0 };
        let graphs = 2f64.powi((n * n.saturating_sub(1) / 2) as i32);
        let _ = write!(s, " [n={n}: {trees:.0} trees, {graphs:.0} labeled graphs]");
    }
    s.push_str("; roughly a microsecond per tree and a few per graph");
    s
}

fn verify(a: &VerifyArgs, guard: Guard, workers: usize, io: &mut Io) -> Outcome {
    if a.list {
        for t in extremal::theorems() {
            writeln!(io.out, "{:<20} {}", t.id, t.summary)?;
        }
        return Ok(());
    }
    if a.ids.is_empty() {
        return Err(Stop::Usage("name checks to run, or `all` (see --list)".into()));
    }
    let ids: Vec<&str> = if a.ids.iter().any(|i| i == "all") {
        extremal::theorem_ids().collect()
    } else {
        a.ids.iter().map(String::as_str).collect()
    };
    if let Some(bad) = ids.iter().find(|id| !extremal::theorem_ids().any(|t| t == **id)) {
        return Err(Error::UnknownTheorem(bad.to_string()).into());
    }
    let opts = VerifyOptions {
        n: a.n.clone(),
        k: a.k,
        max_n_trees: a.max_n_trees,
        cases: a.cases,
        seed: a.seed,
        guard,
        workers,
    };
    if guard == Guard::Lifted {
        writeln!(io.err, "{}", verify_estimate(&opts))?;
    }
    let (mut total, mut failed) = (0usize, 0usize);
    for id in ids {
        let started = Instant::now();
        let results = extremal::verify_theorem(id, &opts)?;
        for r in &results {
            total += 1;
            failed += usize::from(!r.passed);
            match a.format {
                Format::Json | Format::Csv => writeln!(io.out, "{}", r.to_json())?,
                Format::Text => {
                    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let mark = if r.passed { "PASS" } else { "FAIL" };
                    writeln!(io.out, "{mark} {} [{}] {}", r.theorem, params.join(" "), r.detail)?;
                    if let Some(ce) = &r.counterexample {
                        writeln!(io.out, "     counterexample {} F={} edges {:?}", ce.graph6, ce.core_index, ce.edges)?;
                    }
                }
            }
        }
        io.out.flush()?;
        writeln!(io.err, "{id}: {} results in {:.1}s", results.len(), started.elapsed().as_secs_f64())?;
    }
    writeln!(io.err, "{total} checks, {failed} failed")?;
    if failed == 0 {
        Ok(())
    } else {
        Err(Stop::Failed)
    }
}

// ---------------------------------------------------------------------------
// scan and correlate
// ---------------------------------------------------------------------------

/// Times a sample of members to extrapolate a full pass.
fn scan_estimate(class: GraphClass, n: usize) -> std::result::Result<String, Stop> {
    let source = class.source(n, Guard::Lifted)?;
    let len = source.len();
    let sample = len.min(256);
    let started = Instant::now();
    for i in 0..sample {
        if let Some(g) = source.get(i) {
            let _ = extremal::scan_value(&g);
        }
    }
    let per = started.elapsed().as_secs_f64() / sample.max(1) as f64;
    Ok(format!(
        "estimate: {len} indices to visit, about {:.2} us each, {:.0} s in total on one core",
        per * 1e6,
        per * len as f64
    ))
}

fn scan(a: &ScanArgs, guard: Guard, workers: usize, io: &mut Io) -> Outcome {
    if guard == Guard::Lifted {
        writeln!(io.err, "{}", scan_estimate(a.class, a.n)?)?;
    }
    let mut job = Scan::new(a.class, a.n).mode(a.mode).guard(guard).workers(workers);
    for side in [Side::Min, Side::Max] {
        let specs: Vec<FamilySpec> = a.expect.iter().filter(|(s, _)| *s == side).map(|(_, f)| f.clone()).collect();
        if !specs.is_empty() {
            job = job.expect(side, specs);
        }
    }
    let report = job.run()?;
    match a.format {
        Format::Json => writeln!(io.out, "{}", report.to_json())?,
        Format::Csv => write!(io.out, "{}", report.to_csv()?)?,
        Format::Text => {
            writeln!(
                io.out,
                "class {} n={}: {} members ({} enumeration)",
                report.class, report.n, report.members, report.enumeration
            )?;
            for s in &report.sides {
                writeln!(io.out, "{} F = {} attained by {} graph(s) up to isomorphism", s.side, s.value, s.extremizers.len())?;
                for e in &s.extremizers {
                    writeln!(io.out, "  {} edges {:?}", e.graph6, e.edges)?;
                }
                if let Some(ok) = s.matches {
                    let names: Vec<&str> = s.expected.iter().filter_map(|e| e.family.as_deref()).collect();
                    writeln!(io.out, "  expected {}: {}", names.join(", "), if ok { "match" } else { "MISMATCH" })?;
                }
            }
        }
    }
    if report.matches {
        Ok(())
    } else {
        Err(Stop::Failed)
    }
}

fn correlate(a: &CorrelateArgs, guard: Guard, workers: usize, io: &mut Io) -> Outcome {
    if guard == Guard::Lifted {
        writeln!(io.err, "{}", scan_estimate(a.class, a.n)?)?;
    }
    let c = extremal::wiener_correlation(a.class, a.n, guard, workers)?;
    match a.format {
        Format::Json | Format::Csv => writeln!(io.out, "{}", c.to_json())?,
        Format::Text => {
            let rho = c.spearman.map_or("undefined".to_string(), |r| format!("{r:.6}"));
            writeln!(io.out, "class {} n={}: {} samples ({})", c.class, c.n, c.samples, c.population)?;
            writeln!(io.out, "spearman: {rho}")?;
            for r in &c.rows {
                writeln!(io.out, "{:<6} {}  F={} W={}", r.role, r.graph.graph6, r.core_index, r.wiener)?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("coreindex").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("6..20"), Ok(6..=20));
        assert_eq!(parse_range("6..=20"), Ok(6..=20));
        assert_eq!(parse_range("7"), Ok(7..=7));
        assert!(parse_range("9..3").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn compute_path_core() {
        let p4 = to_graph6(&FamilySpec::Path { n: 4 }.build().unwrap());
        let (code, out, _) = call(&["compute", "--g6", &p4]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("F: 10"));
        assert!(out.contains("f: 4 6 6 4"));
        assert!(out.contains("core: 1 2"));
        assert!(out.contains("wiener: 10"));
    }

    #[test]
    fn compute_json_sorted() {
        let g = to_graph6(&FamilySpec::Lollipop { n: 6, g: 3 }.build().unwrap());
        let (code, out, _) = call(&["compute", "--g6", &g, "--format", "json", "--what", "F"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["core_index"], "37");
        assert!(v.get("wiener").is_none());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["compute", "--g6", "D?{~"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["gen", "lollipop:n=3,g=4"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "no-such-check"]).0, EXIT_USAGE);
        assert_eq!(call(&["scan", "--class", "trees", "--n", "10"]).0, EXIT_GUARD);
        assert_eq!(call(&["scan", "--class", "trees", "--n", "5", "--expect", "min=star:n=5"]).0, EXIT_FAILED);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn gen_expect() {
        let (code, out, _) = call(&["gen", "tnk:n=7,k=3", "--expect-F"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("formula 36, computed 36, match"), "{out}");
    }

    #[test]
    fn scan_text() {
        let (code, out, _) = call(&["scan", "--class", "unicyclic", "--n", "5", "--mode", "min", "--expect", "min=cycle:n=5"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("min F = 26"));
        assert!(out.contains("match"));
    }

    #[test]
    fn verify_stream() {
        let (code, out, err) = call(&["verify", "thm-con-T2", "--n", "6", "--k", "3"]);
        assert_eq!(code, EXIT_OK, "{err}");
        let lines: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert!(!lines.is_empty());
        assert!(lines.iter().all(|l| l["passed"] == true));
        assert!(lines[0]["detail"].as_str().unwrap().contains("= 9"));
    }
}
