//! Command-line surface over the library: spectra, certificates, bound
//! tables, family enumeration, and property-verification suites.
//!
//! Exit codes: 0 on success, 1 when a property or soundness check fails,
//! 2 on usage, parse, or I/O errors. All floating-point output is fixed
//! at 9 decimals and every randomized command takes an explicit seed, so
//! identical invocations produce identical bytes.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use eigencut::bounds::{
    certify, check_case_outcome, evaluate_bound, BoundRule, CaseId, Certificate, GraphClass,
    RuleId, RuleStatus,
};
use eigencut::connectivity::{
    brute_force_edge_connectivity, brute_force_vertex_connectivity, cheeger_fraction,
    edge_connectivity, vertex_connectivity,
};
use eigencut::enumerate::{build_a, verify_family, write_family, EnumerateError, FamilyId};
use eigencut::graph::{canonical_key, random_regular_multigraph, Multigraph};
use eigencut::spectral::{
    adjacency_spectrum, interlaces, lambda2, laplacian_spectrum, mu2, quotient_matrix, Partition,
    Spectrum, SpectrumKind,
};

type CliError = Box<dyn std::error::Error>;

#[derive(Parser)]
#[command(
    name = "eigencut",
    version,
    about = "Spectral connectivity certificates for regular multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the adjacency and Laplacian spectra of a .mg file
    Spectrum {
        /// Input graph in .mg format
        file: PathBuf,
    },
    /// Evaluate every bound rule against a graph and cross-check the
    /// claimed guarantees with exact connectivity
    Certify {
        /// Input graph in .mg format
        file: PathBuf,
        /// Pin the parametric rules to one t instead of sweeping
        #[arg(long)]
        t: Option<u32>,
        /// Emit the certificate as JSON
        #[arg(long)]
        json: bool,
    },
    /// Tabulate a rule's threshold over a grid of degrees and orders
    Bounds {
        /// Rule id, e.g. fiedler, cioaba_pi, thm32, thm42_rho
        #[arg(long)]
        rule: RuleId,
        /// Degree or inclusive degree range, e.g. 3 or 3..8
        #[arg(long)]
        d: GridRange,
        /// Order or inclusive order range, e.g. 12 or 6..20; defaults to
        /// 2(d + 1) for rules whose threshold only depends on d
        #[arg(long)]
        n: Option<GridRange>,
        /// Parameter t, required by the parametric rules
        #[arg(long)]
        t: Option<u32>,
        /// Graph class the rule is evaluated for; defaults to the class
        /// the rule was stated for
        #[arg(long)]
        class: Option<ClassArg>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Build one of the named families and write its members plus a
    /// manifest to a directory
    Enumerate {
        /// Family id: B5, B7, B9, B11, A10, A12, A14, A16 or A18
        #[arg(long)]
        family: FamilyId,
        /// Output directory (created if missing)
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a property-verification suite
    Verify {
        /// Suite to run
        #[arg(long, value_enum)]
        suite: Suite,
        /// Number of random trials (suite-specific default)
        #[arg(long)]
        trials: Option<u64>,
        /// Base seed; required for the randomized suites
        #[arg(long)]
        seed: Option<u64>,
        /// Cap on the number of A18 members family-verify checks; the
        /// smaller orders are always verified exhaustively
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Sample a random d-regular multigraph and print or write it
    Random {
        /// Number of vertices
        #[arg(long)]
        n: usize,
        /// Degree
        #[arg(long)]
        d: u32,
        /// Largest edge multiplicity the sampler accepts
        #[arg(long = "max-mult", default_value_t = 3)]
        max_mult: u32,
        /// RNG seed; there is no wall-clock fallback
        #[arg(long)]
        seed: u64,
        /// Write the .mg here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Simple,
    Multigraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    /// Random multigraphs: every fired guarantee is bounded by exact
    /// connectivity and the Cheeger sandwich holds
    ThmSoundness,
    /// Random quotient spectra interlace the adjacency spectrum
    Interlacing,
    /// Flow-based connectivity agrees with the brute-force oracles
    OracleEquivalence,
    /// Exact sign checks behind rho reproduce their integer boundaries
    CaseChecks,
    /// The order-10..18 families meet their spectral floor
    FamilyVerify,
}

impl Suite {
    fn as_str(self) -> &'static str {
        match self {
            Suite::ThmSoundness => "thm-soundness",
            Suite::Interlacing => "interlacing",
            Suite::OracleEquivalence => "oracle-equivalence",
            Suite::CaseChecks => "case-checks",
            Suite::FamilyVerify => "family-verify",
        }
    }
}

/// An inclusive integer range in `lo..hi` (or bare `lo`) syntax.
#[derive(Clone)]
struct GridRange {
    lo: u64,
    hi: u64,
}

impl GridRange {
    fn single(v: u64) -> GridRange {
        GridRange { lo: v, hi: v }
    }

    fn iter(&self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

impl FromStr for GridRange {
    type Err = String;

    fn from_str(s: &str) -> Result<GridRange, String> {
        let end = |t: &str| {
            t.parse::<u64>()
                .map_err(|_| format!("`{t}` is not a non-negative integer"))
        };
        if let Some((a, b)) = s.split_once("..") {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (lo, hi) = (end(a)?, end(b)?);
            if lo > hi {
                return Err(format!("range `{s}` is empty (both ends are included)"));
            }
            Ok(GridRange { lo, hi })
        } else {
            Ok(GridRange::single(end(s)?))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, CliError> {
    match cmd {
        Command::Spectrum { file } => run_spectrum(&file),
        Command::Certify { file, t, json } => run_certify(&file, t, json),
        Command::Bounds {
            rule,
            d,
            n,
            t,
            class,
            format,
        } => run_bounds(rule, &d, n.as_ref(), t, class, format),
        Command::Enumerate { family, out } => run_enumerate(family, &out),
        Command::Verify {
            suite,
            trials,
            seed,
            sample,
        } => run_verify(suite, trials, seed, sample),
        Command::Random {
            n,
            d,
            max_mult,
            seed,
            out,
        } => run_random(n, d, max_mult, seed, out.as_deref()),
    }
}

fn fmt9(x: f64) -> String {
    let s = format!("{x:.9}");
    // Values that round to zero print without the roundoff sign.
    if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn join9(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| fmt9(*v)).collect();
    parts.join(" ")
}

fn read_graph(path: &Path) -> Result<Multigraph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Multigraph::parse_mg(&text).map_err(|e| format!("{}: {e}", path.display()).into())
}

/// Serialize with every f64 rounded to 9 decimals, matching the text
/// output and keeping the JSON byte-stable.
fn to_json_9<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut v = serde_json::to_value(value)?;
    round_floats(&mut v);
    Ok(serde_json::to_string_pretty(&v)?)
}

fn round_floats(v: &mut serde_json::Value) {
    use serde_json::Value;
    match v {
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        Value::Number(n) if n.is_f64() => {
            let mut rounded = (n.as_f64().expect("checked is_f64") * 1e9).round() / 1e9;
            if rounded == 0.0 {
                // Drop the sign bit of a negative zero.
                rounded = 0.0;
            }
            if let Some(num) = serde_json::Number::from_f64(rounded) {
                *v = Value::Number(num);
            }
        }
        _ => {}
    }
}

fn run_spectrum(file: &Path) -> Result<ExitCode, CliError> {
    let g = read_graph(file)?;
    let l2 = lambda2(&g).map_err(|e| format!("{}: {e}", file.display()))?;
    let m2 = mu2(&g).expect("order was checked by lambda2");
    let adjacency = adjacency_spectrum(&g);
    let laplacian = laplacian_spectrum(&g);
    println!("order: {}", g.n());
    if let Some(d) = g.regular_degree() {
        println!("degree: {d}");
    }
    println!("adjacency: {}", join9(&adjacency.values));
    println!("laplacian: {}", join9(&laplacian.values));
    println!("lambda2: {}", fmt9(l2));
    println!("mu2: {}", fmt9(m2));
    Ok(ExitCode::SUCCESS)
}

fn run_certify(file: &Path, t: Option<u32>, json: bool) -> Result<ExitCode, CliError> {
    let g = read_graph(file)?;
    if g.n() < 2 {
        return Err(format!(
            "{}: certification needs at least 2 vertices, got {}",
            file.display(),
            g.n()
        )
        .into());
    }
    let cert = certify(&g, t);
    if json {
        println!("{}", to_json_9(&cert)?);
    } else {
        print_certificate(&cert);
    }
    let violated = cert
        .fired()
        .any(|r| matches!(r.status, RuleStatus::Fired { holds: false, .. }));
    Ok(if violated {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn print_certificate(cert: &Certificate) {
    println!("order: {}", cert.n);
    match cert.d {
        Some(d) => println!("degree: {d}"),
        None => println!("degree: not regular"),
    }
    println!("lambda2: {}", fmt9(cert.lambda2));
    println!("mu2: {}", fmt9(cert.mu2));
    println!("kappa: {}", cert.kappa);
    println!("kappa_prime: {}", cert.kappa_prime);
    println!();
    println!("{:<20} {:>4}  {:<10} detail", "rule", "t", "status");
    for r in &cert.rules {
        let t = r.t.map_or_else(|| "-".to_string(), |t| t.to_string());
        let (status, detail) = match &r.status {
            RuleStatus::Fired {
                threshold,
                comparison,
                kind,
                target,
                holds,
            } => (
                "fired",
                format!(
                    "{comparison} {}  =>  {kind} >= {target}  [{}]",
                    fmt9(*threshold),
                    if *holds { "holds" } else { "VIOLATED" }
                ),
            ),
            RuleStatus::NotFired {
                threshold,
                comparison,
                kind,
                target,
            } => (
                "not fired",
                format!(
                    "needs {comparison} {} for {kind} >= {target}",
                    fmt9(*threshold)
                ),
            ),
            RuleStatus::Skipped { reason } => ("skipped", reason.clone()),
        };
        let mut line = format!("{:<20} {:>4}  {:<10} {detail}", r.rule, t, status);
        if let Some(note) = &r.note {
            write!(line, "  ({note})").expect("writing to a String cannot fail");
        }
        println!("{line}");
    }
}

#[derive(Serialize)]
struct BoundsRow {
    rule: String,
    d: u32,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    threshold: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    comparison: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    target: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

/// The graph class each rule was stated for.
fn natural_class(rule: RuleId) -> GraphClass {
    match rule {
        RuleId::Fiedler
        | RuleId::Chandran
        | RuleId::KrivelevichSudakov
        | RuleId::CioabaT
        | RuleId::CioabaPi
        | RuleId::CioabaT2 => GraphClass::Simple,
        _ => GraphClass::Multigraph,
    }
}

fn run_bounds(
    rule: RuleId,
    d_range: &GridRange,
    n_range: Option<&GridRange>,
    t: Option<u32>,
    class: Option<ClassArg>,
    format: Format,
) -> Result<ExitCode, CliError> {
    if rule.is_parametric() && t.is_none() {
        return Err(format!("rule {rule} is parametric; pass --t").into());
    }
    if d_range.hi > u64::from(u32::MAX) {
        return Err("degree out of range".into());
    }
    let graph_class = match class {
        Some(ClassArg::Simple) => GraphClass::Simple,
        Some(ClassArg::Multigraph) => GraphClass::Multigraph,
        None => natural_class(rule),
    };
    let mut rows = Vec::new();
    for d in d_range.iter() {
        let n_default = GridRange::single(2 * (d + 1));
        let n_iter = n_range.unwrap_or(&n_default).iter();
        for n in n_iter {
            let params = BoundRule {
                id: rule,
                d: d as u32,
                n: n as usize,
                t,
                graph_class,
            };
            rows.push(match evaluate_bound(params) {
                Ok(th) => BoundsRow {
                    rule: rule.to_string(),
                    d: d as u32,
                    n: n as usize,
                    t,
                    threshold: Some(th.value),
                    comparison: Some(th.comparison.as_str().to_string()),
                    kind: Some(th.kind.as_str().to_string()),
                    target: Some(th.target),
                    error: None,
                },
                Err(e) => BoundsRow {
                    rule: rule.to_string(),
                    d: d as u32,
                    n: n as usize,
                    t,
                    threshold: None,
                    comparison: None,
                    kind: None,
                    target: None,
                    error: Some(e.to_string()),
                },
            });
        }
    }
    print_bounds(&rows, format)?;
    Ok(ExitCode::SUCCESS)
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn print_bounds(rows: &[BoundsRow], format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => println!("{}", to_json_9(&rows)?),
        Format::Csv => {
            println!("rule,d,n,t,threshold,comparison,kind,target,error");
            for r in rows {
                let t = r.t.map_or_else(String::new, |t| t.to_string());
                let threshold = r.threshold.map_or_else(String::new, fmt9);
                let target = r.target.map_or_else(String::new, |v| v.to_string());
                println!(
                    "{},{},{},{},{},{},{},{},{}",
                    r.rule,
                    r.d,
                    r.n,
                    t,
                    threshold,
                    r.comparison.as_deref().unwrap_or(""),
                    r.kind.as_deref().unwrap_or(""),
                    target,
                    csv_escape(r.error.as_deref().unwrap_or(""))
                );
            }
        }
        Format::Table => {
            println!(
                "{:<20} {:>4} {:>5} {:>4}  {:>14} {:<11} {:<12} {:>6}",
                "rule", "d", "n", "t", "threshold", "comparison", "kind", "target"
            );
            for r in rows {
                let t = r.t.map_or_else(|| "-".to_string(), |t| t.to_string());
                match (&r.threshold, &r.error) {
                    (Some(th), _) => println!(
                        "{:<20} {:>4} {:>5} {:>4}  {:>14} {:<11} {:<12} {:>6}",
                        r.rule,
                        r.d,
                        r.n,
                        t,
                        fmt9(*th),
                        r.comparison.as_deref().unwrap_or(""),
                        r.kind.as_deref().unwrap_or(""),
                        r.target.map_or_else(String::new, |v| v.to_string())
                    ),
                    (None, Some(err)) => {
                        println!("{:<20} {:>4} {:>5} {:>4}  {err}", r.rule, r.d, r.n, t)
                    }
                    (None, None) => unreachable!("rows carry a threshold or an error"),
                }
            }
        }
    }
    Ok(())
}

fn run_enumerate(family: FamilyId, out: &Path) -> Result<ExitCode, CliError> {
    let members = family.build()?;
    let manifest = write_family(out, family.as_str(), &members)?;
    println!("family: {family}");
    println!("members: {}", members.len());
    println!("manifest: {}", manifest.display());
    Ok(ExitCode::SUCCESS)
}

fn run_random(
    n: usize,
    d: u32,
    max_mult: u32,
    seed: u64,
    out: Option<&Path>,
) -> Result<ExitCode, CliError> {
    let g = random_regular_multigraph(n, d, max_mult, seed)?;
    let text = g.to_mg();
    match out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
            println!("wrote: {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

/// One suite run: human-readable summary lines plus at most one failure
/// carrying its counterexample.
struct SuiteOutcome {
    lines: Vec<String>,
    failure: Option<Failure>,
}

struct Failure {
    description: String,
    /// The counterexample as an .mg blob, when the failure has one.
    witness: Option<String>,
}

impl SuiteOutcome {
    fn pass(lines: Vec<String>) -> SuiteOutcome {
        SuiteOutcome {
            lines,
            failure: None,
        }
    }

    fn fail(description: String, witness: Option<&Multigraph>) -> SuiteOutcome {
        SuiteOutcome {
            lines: Vec::new(),
            failure: Some(Failure {
                description,
                witness: witness.map(Multigraph::to_mg),
            }),
        }
    }
}

fn run_verify(
    suite: Suite,
    trials: Option<u64>,
    seed: Option<u64>,
    sample: Option<usize>,
) -> Result<ExitCode, CliError> {
    let require_seed = || {
        seed.ok_or_else(|| {
            CliError::from(format!(
                "suite {} is randomized and requires --seed",
                suite.as_str()
            ))
        })
    };
    println!("suite: {}", suite.as_str());
    let outcome = match suite {
        Suite::ThmSoundness => {
            let (trials, seed) = (trials.unwrap_or(5000), require_seed()?);
            println!("trials: {trials} (seed {seed})");
            suite_thm_soundness(trials, seed)?
        }
        Suite::Interlacing => {
            let (trials, seed) = (trials.unwrap_or(1000), require_seed()?);
            println!("trials: {trials} (seed {seed})");
            suite_interlacing(trials, seed)?
        }
        Suite::OracleEquivalence => {
            let (trials, seed) = (trials.unwrap_or(500), require_seed()?);
            println!("trials: {trials} (seed {seed})");
            suite_oracle_equivalence(trials, seed)?
        }
        Suite::CaseChecks => suite_case_checks(),
        Suite::FamilyVerify => suite_family_verify(sample)?,
    };
    for line in &outcome.lines {
        println!("{line}");
    }
    match outcome.failure {
        None => {
            println!("result: pass");
            Ok(ExitCode::SUCCESS)
        }
        Some(failure) => {
            println!("FAIL: {}", failure.description);
            if let Some(blob) = failure.witness {
                print!("{blob}");
            }
            println!("result: fail");
            Ok(ExitCode::from(1))
        }
    }
}

/// Raise the multiplicity cap until `(n-1) * cap >= d + 2`. At the bare
/// feasibility boundary only a handful of multiplicity matrices exist
/// (at equality exactly one), and rejection sampling all but never hits
/// them; two spare slots keep the acceptance rate healthy.
fn roomy_cap(n: usize, d: u32, mut cap: u32) -> u32 {
    while (n as u64 - 1) * u64::from(cap) < u64::from(d) + 2 {
        cap += 1;
    }
    cap
}

/// Deterministic trial graph for the soundness and interlacing suites:
/// d in 3..=8, n in 4..=16 (bumped by one when n*d is odd).
fn sample_multigraph(s: u64) -> Result<Multigraph, CliError> {
    let mut n = 4 + (s % 13) as usize;
    let d = 3 + ((s / 13) % 6) as u32;
    if n % 2 == 1 && d % 2 == 1 {
        n += 1;
    }
    sample_with_retries(n, d, roomy_cap(n, d, 3), s)
}

/// Trial graph for the oracle suite: n in 4..=12, d in 2..=6 (bumped by
/// one when n*d is odd), multiplicity cap 1..=3 raised to feasibility.
fn sample_small_multigraph(s: u64) -> Result<Multigraph, CliError> {
    let n = 4 + (s % 9) as usize;
    let mut d = 2 + ((s / 9) % 5) as u32;
    if n % 2 == 1 && d % 2 == 1 {
        d += 1;
    }
    let mut max_mult = 1 + (s % 3) as u32;
    if max_mult == 1 && d > 5 {
        // The simple-graph acceptance rate of the pairing model decays
        // like exp(-(d^2 - 1)/4); past d = 5 it stalls.
        max_mult = 2;
    }
    sample_with_retries(n, d, roomy_cap(n, d, max_mult), s)
}

fn sample_with_retries(n: usize, d: u32, max_mult: u32, seed: u64) -> Result<Multigraph, CliError> {
    for attempt in 0..8u64 {
        let salted = seed.wrapping_add(attempt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        if let Ok(g) = random_regular_multigraph(n, d, max_mult, salted) {
            return Ok(g);
        }
    }
    Err(format!("no admissible sample for n = {n}, d = {d}, seed {seed}").into())
}

fn suite_thm_soundness(trials: u64, seed: u64) -> Result<SuiteOutcome, CliError> {
    let mut fired_total = 0u64;
    for i in 0..trials {
        let s = seed.wrapping_add(i);
        let g = sample_multigraph(s)?;
        let d = g.regular_degree().expect("the sampler is degree-exact");
        let cert = certify(&g, None);
        for r in cert.fired() {
            let RuleStatus::Fired {
                kind,
                target,
                holds,
                ..
            } = &r.status
            else {
                unreachable!("fired() yields fired outcomes only");
            };
            let exact = if kind == "kappa" {
                u64::from(cert.kappa)
            } else {
                cert.kappa_prime
            };
            if !holds || u64::from(*target) > exact {
                return Ok(SuiteOutcome::fail(
                    format!(
                        "rule {} claims {kind} >= {target} but the exact value is {exact} (trial seed {s})",
                        r.rule
                    ),
                    Some(&g),
                ));
            }
            fired_total += 1;
        }
        let (boundary, size) = cheeger_fraction(&g)?;
        let h = boundary as f64 / size as f64;
        let gap = (f64::from(d) - cert.lambda2).max(0.0);
        let lower = gap / 2.0;
        let upper = (2.0 * f64::from(d) * gap).sqrt();
        if !(lower <= h + 1e-8 && h <= upper + 1e-8) {
            return Ok(SuiteOutcome::fail(
                format!(
                    "cheeger sandwich violated: {} <= {} <= {} (trial seed {s})",
                    fmt9(lower),
                    fmt9(h),
                    fmt9(upper)
                ),
                Some(&g),
            ));
        }
    }
    Ok(SuiteOutcome::pass(vec![
        format!("graphs checked: {trials}"),
        format!("fired guarantees, all sound: {fired_total}"),
        format!("cheeger sandwiches: {trials}"),
    ]))
}

fn random_partition(n: usize, num_blocks: usize, seed: u64) -> Partition {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); num_blocks];
    for (i, v) in order.into_iter().enumerate() {
        blocks[i % num_blocks].push(v);
    }
    Partition::new(blocks, n).expect("round-robin fills every block")
}

fn suite_interlacing(trials: u64, seed: u64) -> Result<SuiteOutcome, CliError> {
    for i in 0..trials {
        let s = seed.wrapping_add(i);
        let g = sample_multigraph(s)?;
        // Strictly coarser than the discrete partition, so the quotient
        // is genuinely smaller than the graph.
        let num_blocks = (2 + (s % 3) as usize).min(g.n() - 1);
        let partition = random_partition(g.n(), num_blocks, s ^ 0x5157_4f49_454e_5421);
        let q = quotient_matrix(&g, &partition).expect("the partition covers the graph");
        let inner = Spectrum {
            values: q.eigenvalues(),
            kind: SpectrumKind::General,
        };
        let outer = adjacency_spectrum(&g);
        if !interlaces(&inner, &outer).expect("both spectra are non-empty") {
            let blocks: Vec<String> = partition
                .blocks()
                .iter()
                .map(|b| format!("{b:?}"))
                .collect();
            return Ok(SuiteOutcome::fail(
                format!(
                    "quotient spectrum fails to interlace for partition {} (trial seed {s})",
                    blocks.join(" | ")
                ),
                Some(&g),
            ));
        }
    }
    Ok(SuiteOutcome::pass(vec![format!(
        "quotient spectra interlacing: {trials}/{trials}"
    )]))
}

fn suite_oracle_equivalence(trials: u64, seed: u64) -> Result<SuiteOutcome, CliError> {
    for i in 0..trials {
        let s = seed.wrapping_add(i);
        let g = sample_small_multigraph(s)?;
        let flow_kappa = vertex_connectivity(&g)?;
        let brute_kappa = brute_force_vertex_connectivity(&g)?;
        if flow_kappa != brute_kappa {
            return Ok(SuiteOutcome::fail(
                format!(
                    "vertex connectivity disagrees: flow {flow_kappa}, brute force {brute_kappa} (trial seed {s})"
                ),
                Some(&g),
            ));
        }
        let cut_kappa_prime = edge_connectivity(&g)?;
        let brute_kappa_prime = brute_force_edge_connectivity(&g)?;
        if cut_kappa_prime != brute_kappa_prime {
            return Ok(SuiteOutcome::fail(
                format!(
                    "edge connectivity disagrees: mincut {cut_kappa_prime}, brute force {brute_kappa_prime} (trial seed {s})"
                ),
                Some(&g),
            ));
        }
    }
    Ok(SuiteOutcome::pass(vec![format!(
        "connectivity oracles agree: {trials}/{trials}"
    )]))
}

/// The expected truth of each exact sign check over its grid, frozen
/// from the first validated run and spot-checked against the derivation.
fn case_expectation(case: CaseId, d: u32, n: usize) -> bool {
    match case {
        CaseId::C2a => n >= 13,
        CaseId::C2b => n <= 17,
        CaseId::C2c => n <= 15,
        CaseId::C2d => match d {
            3 => false,
            4 => n >= 21,
            5 => n >= 14,
            6 => n >= 12,
            7 => n >= 11,
            _ => true,
        },
        CaseId::C3a => true,
        CaseId::C3b => d >= 4 || n >= 19,
    }
}

fn suite_case_checks() -> SuiteOutcome {
    let grids: [(CaseId, Vec<u32>, std::ops::RangeInclusive<usize>); 6] = [
        (CaseId::C2a, vec![3], 10..=200),
        (CaseId::C2b, vec![5], 10..=200),
        (CaseId::C2c, vec![7], 10..=200),
        (CaseId::C2d, (3..=20).collect(), 10..=200),
        (CaseId::C3a, (3..=20).collect(), 14..=200),
        (CaseId::C3b, (3..=20).collect(), 14..=200),
    ];
    let mut lines = Vec::new();
    for (case, ds, ns) in grids {
        let mut points = 0u64;
        for &d in &ds {
            for n in ns.clone() {
                let outcome =
                    check_case_outcome(case, d, n).expect("the sweep stays inside the case domain");
                let expected = case_expectation(case, d, n);
                if outcome.holds() != expected {
                    return SuiteOutcome::fail(
                        format!(
                            "case {case} at d = {d}, n = {n}: sign check holds = {}, expected {expected}",
                            outcome.holds()
                        ),
                        None,
                    );
                }
                points += 1;
            }
        }
        lines.push(format!("case {case}: {points} grid points match"));
    }
    SuiteOutcome::pass(lines)
}

/// Frozen family sizes from the first validated enumeration run; the
/// order-10 count is additionally confirmed against an exhaustive scan
/// in the library tests.
const FAMILY_GOLDENS: [(usize, usize); 5] = [(10, 6), (12, 42), (14, 78), (16, 846), (18, 8248)];

fn suite_family_verify(sample: Option<usize>) -> Result<SuiteOutcome, CliError> {
    let mut lines = Vec::new();
    for (order, expected) in FAMILY_GOLDENS {
        let cap = if order == 18 { sample } else { None };
        let report = match verify_family(order, cap) {
            Ok(report) => report,
            Err(EnumerateError::ClaimViolated {
                family,
                key,
                lambda2,
                floor,
            }) => {
                let members = build_a(order)?;
                let witness = members
                    .iter()
                    .find(|g| canonical_key(g).digest_hex() == key)
                    .expect("the violating member is in the family");
                return Ok(SuiteOutcome::fail(
                    format!(
                        "family {family}: member {key} has lambda2 {} below the floor {}",
                        fmt9(lambda2),
                        fmt9(floor)
                    ),
                    Some(witness),
                ));
            }
            Err(e) => return Err(e.into()),
        };
        if report.total != expected {
            return Ok(SuiteOutcome::fail(
                format!(
                    "family {} has {} members, expected {expected}",
                    report.family, report.total
                ),
                None,
            ));
        }
        lines.push(format!(
            "{}: {} members, verified {}, floor {}, min lambda2 {} (margin {:.3e})",
            report.family,
            report.total,
            report.verified,
            fmt9(report.rho_floor),
            fmt9(report.min_lambda2),
            report.margin
        ));
    }
    Ok(SuiteOutcome::pass(lines))
}
