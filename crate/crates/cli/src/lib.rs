//! Command-line front end: reads state files, runs the library pipelines and
//! prints JSON reports.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use slocc_cy::arith::{PrimeField, DEFAULT_PRIMES};
use slocc_cy::geometry::{equations_of_y, smoothness_witness, SmoothnessVerdict};
use slocc_cy::invariants::{
    cayley_hyperdet, classify, compare_verdicts, moduli_dimension, projection_invariants, schlaefli_hyperdet,
    Comparison, JInvariant, Status,
};
use slocc_cy::states::{parse_state, random_state, QTensor};
use slocc_cy::zalgebra::{cubic_hilbert, quadratic_hilbert, roundtrip_check};
use slocc_cy::Error;

pub const TOOL: &str = "slocc-cy";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Primes used by `hilbert` and `roundtrip` when none are given.
const SECTION_PRIMES: [u32; 3] = [7, 11, 13];

#[derive(Parser, Debug)]
#[command(name = "slocc-cy", version, about = "SLOCC orbit invariants of multi-qudit states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Write the report to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Exit with status 1 when the input is degenerate
    #[arg(long)]
    strict: bool,
    /// Print a plain-text table instead of JSON
    #[arg(long)]
    pretty: bool,
}

#[derive(Args, Debug, Clone)]
struct PrimeArgs {
    /// Comma-separated primes
    #[arg(long, value_delimiter = ',')]
    primes: Option<Vec<u32>>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank, smoothness and curve invariants of a state
    Classify {
        state: PathBuf,
        #[command(flatten)]
        primes: PrimeArgs,
        #[command(flatten)]
        common: Common,
    },
    /// j-invariants of the determinantal projections
    Jinv {
        state: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Compare two states of the same format
    Equiv {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        primes: PrimeArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Cayley (2x2x2) or Schlaefli (2x2x2x2) hyperdeterminant
    Hyperdet {
        state: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Exhaustive Jacobian sweep over finite fields
    Smoothness {
        state: PathBuf,
        #[command(flatten)]
        primes: PrimeArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Hilbert function of the relation algebra, per prime
    Hilbert {
        state: PathBuf,
        #[command(flatten)]
        primes: PrimeArgs,
        #[arg(long)]
        k_max: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Recover V_eta from the points of Y_eta, per prime
    Roundtrip {
        state: PathBuf,
        #[command(flatten)]
        primes: PrimeArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Write a random integer state in canonical form
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        bound: i64,
        #[command(flatten)]
        common: Common,
    },
    /// Expected dimension of the orbit space
    ModuliDim {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug)]
enum Failure {
    /// Bad flags, unreadable files, malformed input.
    Usage(String),
    /// The computation ran but the input is degenerate.
    Degenerate(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RankDeficient(_)
            | Error::AllPrimesBad
            | Error::InsufficientPoints { .. }
            | Error::BadReduction { .. }
            | Error::NotOnVariety => Failure::Degenerate(e),
            e => Failure::Usage(e.to_string()),
        }
    }
}

#[derive(Serialize)]
struct Report<T: Serialize> {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    input_hash: String,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct PerPrime<T: Serialize> {
    p: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

impl<T: Serialize> PerPrime<T> {
    fn new(p: u32, r: slocc_cy::Result<T>) -> Self {
        match r {
            Ok(v) => Self { p, result: Some(v), error: None },
            Err(e) => Self { p, result: None, error: Some(e.to_string()) },
        }
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn load(path: &Path) -> Result<QTensor, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_state(&bytes).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn primes_or(args: &PrimeArgs, default: &[u32]) -> Result<Vec<u32>, Failure> {
    let mut primes = args.primes.clone().unwrap_or_else(|| default.to_vec());
    if primes.is_empty() {
        return Err(Failure::Usage("empty prime list".into()));
    }
    for &p in &primes {
        PrimeField::new(p as u64).map_err(|e| Failure::Usage(e.to_string()))?;
    }
    primes.sort_unstable();
    primes.dedup();
    Ok(primes)
}

struct Outcome {
    report: Value,
    degenerate: bool,
}

fn outcome<T: Serialize>(command: &'static str, input_hash: String, body: T, degenerate: bool) -> Outcome {
    let report = Report { tool: TOOL, version: VERSION, command, input_hash, body };
    Outcome { report: serde_json::to_value(report).expect("reports serialize"), degenerate }
}

#[derive(Serialize)]
struct ErrorBody {
    error: String,
}

fn execute(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Classify { state, primes, .. } => {
            let t = load(state)?;
            let v = classify(&t, &primes_or(primes, &DEFAULT_PRIMES)?);
            let degenerate = v.status != Status::SmoothGeneric;
            Ok(outcome("classify", t.content_hash(), v, degenerate))
        }
        Command::Jinv { state, .. } => {
            let t = load(state)?;
            #[derive(Serialize)]
            struct Body {
                format: [usize; 2],
                j: Option<JInvariant>,
                projections: Vec<slocc_cy::invariants::CurveInvariants>,
            }
            if !matches!((t.n(), t.d()), (3, 3) | (4, 2)) {
                return Err(Error::UnsupportedFormat { n: t.n(), d: t.d() }.into());
            }
            let projections = projection_invariants(&equations_of_y(&t)?)?;
            let j = projections.iter().all(|c| c.j == projections[0].j).then(|| projections[0].j.clone());
            let degenerate = !matches!(j, Some(JInvariant::Finite(_)));
            Ok(outcome("jinv", t.content_hash(), Body { format: [t.n(), t.d()], j, projections }, degenerate))
        }
        Command::Equiv { a, b, primes, .. } => {
            let (ta, tb) = (load(a)?, load(b)?);
            if (ta.n(), ta.d()) != (tb.n(), tb.d()) {
                return Err(Error::FormatMismatch.into());
            }
            let primes = primes_or(primes, &DEFAULT_PRIMES)?;
            let comparison = compare_verdicts(&classify(&ta, &primes), &classify(&tb, &primes));
            #[derive(Serialize)]
            struct Body {
                a_hash: String,
                b_hash: String,
                comparison: Comparison,
            }
            let (a_hash, b_hash) = (ta.content_hash(), tb.content_hash());
            let hash = sha256_hex(format!("{a_hash}\n{b_hash}").as_bytes());
            let degenerate = matches!(comparison, Comparison::BothDegenerate { .. });
            Ok(outcome("equiv", hash, Body { a_hash, b_hash, comparison }, degenerate))
        }
        Command::Hyperdet { state, .. } => {
            let t = load(state)?;
            let (kind, value) = match (t.n(), t.d()) {
                (3, 2) => ("cayley", cayley_hyperdet(&t)?),
                (4, 2) => ("schlaefli", schlaefli_hyperdet(&t)?),
                _ => return Err(Error::WrongFormat.into()),
            };
            #[derive(Serialize)]
            struct Body {
                kind: &'static str,
                value: String,
            }
            let degenerate = num_is_zero(&value);
            let body = Body { kind, value: slocc_cy::arith::rational_to_string(&value) };
            Ok(outcome("hyperdet", t.content_hash(), body, degenerate))
        }
        Command::Smoothness { state, primes, .. } => {
            let t = load(state)?;
            let r = smoothness_witness(&t, &primes_or(primes, &DEFAULT_PRIMES)?)?;
            let degenerate = r.verdict == SmoothnessVerdict::SingularFound;
            Ok(outcome("smoothness", t.content_hash(), r, degenerate))
        }
        Command::Hilbert { state, primes, k_max, .. } => {
            let t = load(state)?;
            let primes = primes_or(primes, &SECTION_PRIMES)?;
            let (kind, default_k): (fn(&QTensor, u32, usize) -> slocc_cy::Result<_>, usize) = match (t.n(), t.d()) {
                (3, 3) => (quadratic_hilbert, 4),
                (4, 2) => (cubic_hilbert, 5),
                (n, d) => return Err(Error::UnsupportedFormat { n, d }.into()),
            };
            let k = k_max.unwrap_or(default_k);
            if t.d().checked_pow(k as u32).is_none_or(|v| v > slocc_cy::zalgebra::MAX_HILBERT_DIM) {
                return Err(Failure::Usage(format!("--k-max {k} is too large")));
            }
            let results: Vec<_> = primes.iter().map(|&p| PerPrime::new(p, kind(&t, p, k))).collect();
            let degenerate = results.iter().any(|r| !r.result.as_ref().is_some_and(|h| h.matches));
            #[derive(Serialize)]
            struct Body<T: Serialize> {
                k_max: usize,
                profiles: Vec<PerPrime<T>>,
            }
            Ok(outcome("hilbert", t.content_hash(), Body { k_max: k, profiles: results }, degenerate))
        }
        Command::Roundtrip { state, primes, .. } => {
            let t = load(state)?;
            let primes = primes_or(primes, &SECTION_PRIMES)?;
            let results: Vec<_> = primes.iter().map(|&p| PerPrime::new(p, roundtrip_check(&t, p))).collect();
            let degenerate = results.iter().any(|r| r.result != Some(true));
            #[derive(Serialize)]
            struct Body {
                results: Vec<PerPrime<bool>>,
            }
            Ok(outcome("roundtrip", t.content_hash(), Body { results }, degenerate))
        }
        Command::Sample { .. } | Command::ModuliDim { .. } => unreachable!("handled without a state file"),
    }
}

fn num_is_zero(x: &slocc_cy::arith::Rational) -> bool {
    *x.numer() == 0.into()
}

fn render_pretty(report: &Value, color: bool) -> String {
    let mut s = String::new();
    let Value::Object(map) = report else { return report.to_string() };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    for (k, v) in map {
        let text = match v {
            Value::String(t) => t.clone(),
            other => other.to_string(),
        };
        let text = if color && (k == "status" || k == "verdict" || k == "error") {
            format!("\x1b[1m{text}\x1b[0m")
        } else {
            text
        };
        s.push_str(&format!("{k:<width$}  {text}\n"));
    }
    s
}

fn emit(common: &Common, report: &Value, out: &mut dyn Write) -> Result<(), Failure> {
    let text = if common.pretty {
        let color = std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && common.out.is_none();
        render_pretty(report, color)
    } else {
        serde_json::to_string_pretty(report).expect("json") + "\n"
    };
    match &common.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::Usage(e.to_string())),
    }
}

fn common_of(command: &Command) -> &Common {
    match command {
        Command::Classify { common, .. }
        | Command::Jinv { common, .. }
        | Command::Equiv { common, .. }
        | Command::Hyperdet { common, .. }
        | Command::Smoothness { common, .. }
        | Command::Hilbert { common, .. }
        | Command::Roundtrip { common, .. }
        | Command::Sample { common, .. }
        | Command::ModuliDim { common, .. } => common,
    }
}

fn dispatch(command: &Command, out: &mut dyn Write) -> Result<bool, Failure> {
    let common = common_of(command);
    match command {
        Command::Sample { n, d, seed, bound, .. } => {
            if *n < 2 || *d < 2 || *bound < 1 || slocc_cy::states::MAX_COEFFS < d.saturating_pow(*n as u32) {
                return Err(Failure::Usage(format!("cannot sample n={n}, d={d}, bound={bound}")));
            }
            let state = random_state(*n, *d, *bound, *seed).to_json() + "\n";
            match &common.out {
                Some(path) => {
                    std::fs::write(path, &state).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    #[derive(Serialize)]
                    struct Body {
                        state_hash: String,
                    }
                    let params = format!("sample n={n} d={d} seed={seed} bound={bound}");
                    let body = Body { state_hash: sha256_hex(state.trim_end().as_bytes()) };
                    let o = outcome("sample", sha256_hex(params.as_bytes()), body, false);
                    let stdout_only = Common { out: None, ..common.clone() };
                    emit(&stdout_only, &o.report, out)?;
                }
                None => out.write_all(state.as_bytes()).map_err(|e| Failure::Usage(e.to_string()))?,
            }
            Ok(false)
        }
        Command::ModuliDim { n, d, .. } => {
            let dimension = moduli_dimension(*n, *d).map_err(|e| Failure::Usage(e.to_string()))?;
            #[derive(Serialize)]
            struct Body {
                dimension: i128,
            }
            let params = format!("moduli-dim n={n} d={d}");
            let o = outcome("moduli-dim", sha256_hex(params.as_bytes()), Body { dimension }, false);
            emit(common, &o.report, out)?;
            Ok(false)
        }
        _ => {
            let o = match execute(command) {
                Ok(o) => o,
                Err(Failure::Degenerate(e)) => {
                    let hash = input_hash_of(command)?;
                    outcome(command_name(command), hash, ErrorBody { error: e.to_string() }, true)
                }
                Err(f) => return Err(f),
            };
            emit(common, &o.report, out)?;
            Ok(o.degenerate)
        }
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Classify { .. } => "classify",
        Command::Jinv { .. } => "jinv",
        Command::Equiv { .. } => "equiv",
        Command::Hyperdet { .. } => "hyperdet",
        Command::Smoothness { .. } => "smoothness",
        Command::Hilbert { .. } => "hilbert",
        Command::Roundtrip { .. } => "roundtrip",
        Command::Sample { .. } => "sample",
        Command::ModuliDim { .. } => "moduli-dim",
    }
}

fn input_hash_of(command: &Command) -> Result<String, Failure> {
    match command {
        Command::Classify { state, .. }
        | Command::Jinv { state, .. }
        | Command::Hyperdet { state, .. }
        | Command::Smoothness { state, .. }
        | Command::Hilbert { state, .. }
        | Command::Roundtrip { state, .. } => Ok(load(state)?.content_hash()),
        Command::Equiv { a, b, .. } => {
            Ok(sha256_hex(format!("{}\n{}", load(a)?.content_hash(), load(b)?.content_hash()).as_bytes()))
        }
        Command::Sample { .. } | Command::ModuliDim { .. } => Ok(String::new()),
    }
}

/// Runs one invocation. Returns the process exit code: 0 on success, 1 for
/// degenerate input under `--strict`, 2 for usage and I/O errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(&cli.command, out) {
        Ok(degenerate) => {
            if degenerate && common_of(&cli.command).strict {
                1
            } else {
                0
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "usage: slocc-cy <COMMAND> [OPTIONS]; see `slocc-cy --help`");
            2
        }
        Err(Failure::Degenerate(e)) => {
            let _ = writeln!(err, "error: {e}");
            if common_of(&cli.command).strict {
                1
            } else {
                0
            }
        }
    }
}
