//! Command-line surface.
//!
//! Structured JSON (or DOT) goes to stdout, a short human summary to stderr
//! unless `--quiet`. Exit status: 0 success, 1 verification FAIL, 2 usage or
//! input error, 3 range or size cap exceeded.

mod document;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

pub use document::GraphDocument;

use crate::error::Error;
use crate::exactness::{check_n_exact_as, verify_hamilton_characterization, GraphOrigin, HamiltonRecord};
use crate::graph::{connected_components, PrimeGraph};
use crate::models::{graph_from_degrees, psl2_graph, suzuki_graph, DegreeSet};
use crate::numtheory::PrimePower;
use crate::par::Exec;
use crate::search::{alpha_profiles, find_alphas, sweep_profiles, SolvableShape, SweepRecord, ALPHA_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RANGE: i32 = 3;

const DEFAULT_ALPHA_MAX: u32 = 40;
const SUITE_NS: [usize; 4] = [4, 5, 6, 7];

#[derive(Debug, Parser)]
#[command(
    name = "chargraph",
    version,
    about = "Prime-divisor character graphs and n-exactness"
)]
struct Cli {
    /// Suppress the summary on standard error.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Character graph of PSL2(q).
    Psl2 {
        q: u128,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Character graph of the Suzuki group 2B2(2^(2m+1)).
    Suzuki {
        m: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Character graph of a degree set read from FILE (one integer per line, `#` comments).
    Degrees {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Decide n-exactness of a JSON graph document.
    Analyze {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        input: PathBuf,
        /// Treat the input as a character graph (enables the MaxExtremal class).
        #[arg(long)]
        character_graph: bool,
    },
    /// Find exponents alpha with |pi(2^alpha - 1)| = |pi(2^alpha + 1)| = k.
    Search {
        #[arg(long)]
        n: usize,
        /// One of n-3, n-2, n-1 (or the number itself).
        #[arg(long)]
        k: String,
        #[arg(long, default_value_t = 2)]
        alpha_min: u32,
        #[arg(long, default_value_t = DEFAULT_ALPHA_MAX)]
        alpha_max: u32,
    },
    /// Run the verification suite: order-bound sweep, classification and Hamilton check.
    Verify {
        #[arg(long, required = true)]
        suite: bool,
        /// Restrict to one n (default: 4, 5, 6, 7).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ALPHA_MAX)]
        alpha_max: u32,
    },
    /// Re-emit a JSON graph document (from --input or stdin) canonically as JSON or DOT.
    Export {
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

struct Outcome {
    stdout: String,
    summary: String,
    failed: bool,
}

impl Outcome {
    fn ok(stdout: String, summary: String) -> Self {
        Outcome {
            stdout,
            summary,
            failed: false,
        }
    }
}

/// Parses `args` (including the program name) and executes the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.stdout.as_bytes());
            if !cli.quiet && !outcome.summary.is_empty() {
                let _ = writeln!(err, "{}", outcome.summary);
            }
            if outcome.failed {
                EXIT_FAIL
            } else {
                EXIT_OK
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_range_error() {
                EXIT_RANGE
            } else {
                EXIT_USAGE
            }
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports always serialize");
    s.push('\n');
    s
}

fn render(g: &PrimeGraph, metadata: Map<String, Value>, format: Format) -> String {
    let doc = GraphDocument::from_graph(g, Some(metadata));
    match format {
        Format::Json => {
            let mut s = doc.to_json();
            s.push('\n');
            s
        }
        Format::Dot => doc.to_dot(),
    }
}

fn components_value(g: &PrimeGraph) -> Value {
    json!(connected_components(g))
}

fn graph_summary(label: &str, g: &PrimeGraph) -> String {
    format!("{label}: {} vertices, {} edges", g.order(), g.edge_count())
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn read_document(text: &str, origin: &str) -> Result<PrimeGraph, Failure> {
    let doc =
        GraphDocument::from_json(text).map_err(|e| Failure::Usage(format!("{origin} is not a graph document: {e}")))?;
    Ok(doc.to_graph()?)
}

/// Degree files: one positive integer per line; `#` starts a comment; blank lines ignored.
fn parse_degrees(text: &str) -> Result<DegreeSet, Failure> {
    let mut degrees = vec![1u128];
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let d: u128 = line
            .parse()
            .map_err(|_| Failure::Usage(format!("line {}: '{line}' is not a positive integer", lineno + 1)))?;
        if d == 0 {
            return Err(Failure::Usage(format!("line {}: degrees must be positive", lineno + 1)));
        }
        degrees.push(d);
    }
    Ok(DegreeSet::new(degrees)?)
}

fn parse_k(n: usize, arg: &str) -> Result<usize, Failure> {
    let arg = arg.trim();
    let offset = match arg {
        "n-3" => Some(3),
        "n-2" => Some(2),
        "n-1" => Some(1),
        _ => None,
    };
    match offset {
        Some(o) => n
            .checked_sub(o)
            .ok_or_else(|| Failure::Usage(format!("--k {arg} is negative for n = {n}"))),
        None => arg
            .parse()
            .map_err(|_| Failure::Usage(format!("--k expects n-3, n-2, n-1 or an integer, got '{arg}'"))),
    }
}

#[derive(Serialize)]
struct SweepSection {
    n: usize,
    records: Vec<SweepRecord>,
}

#[derive(Serialize)]
struct SuiteSummary {
    records: usize,
    pass: usize,
    fail: usize,
}

#[derive(Serialize)]
struct SuiteReport {
    n_values: Vec<usize>,
    alpha_range: (u32, u32),
    sweeps: Vec<SweepSection>,
    hamilton: Vec<HamiltonRecord>,
    summary: SuiteSummary,
}

fn verify_suite(n: Option<usize>, alpha_max: u32) -> Result<Outcome, Failure> {
    if alpha_max > ALPHA_CAP {
        return Err(Error::OutOfRange(format!("--alpha-max {alpha_max} exceeds the cap {ALPHA_CAP}")).into());
    }
    let ns: Vec<usize> = match n {
        Some(n) => vec![n],
        None => SUITE_NS.to_vec(),
    };
    let exec = Exec::default();
    let range = 2..=alpha_max;
    let profiles = alpha_profiles(range.clone(), exec)?;
    let mut sweeps = Vec::new();
    for &n in &ns {
        let records = sweep_profiles(exec, n, &profiles, range.clone(), &SolvableShape::ALL)?;
        sweeps.push(SweepSection { n, records });
    }
    let hamilton = (2..=12)
        .map(verify_hamilton_characterization)
        .collect::<Result<Vec<_>, _>>()?;

    let statuses: Vec<bool> = sweeps
        .iter()
        .flat_map(|s| s.records.iter().map(|r| r.status.is_pass()))
        .chain(hamilton.iter().map(|h| h.status.is_pass()))
        .collect();
    let pass = statuses.iter().filter(|&&ok| ok).count();
    let fail = statuses.len() - pass;

    let mut summary = format!(
        "verify: n in {ns:?}, alpha in [2, {alpha_max}]: {} records, {pass} PASS, {fail} FAIL",
        statuses.len()
    );
    for section in &sweeps {
        for r in section.records.iter().filter(|r| !r.status.is_pass()) {
            summary.push_str(&format!("\n  FAIL n={} alpha={} {}", section.n, r.alpha, r.model));
        }
    }
    for h in hamilton.iter().filter(|h| !h.status.is_pass()) {
        summary.push_str(&format!("\n  FAIL hamilton f={}", h.f));
    }
    let report = SuiteReport {
        n_values: ns,
        alpha_range: (2, alpha_max),
        sweeps,
        hamilton,
        summary: SuiteSummary {
            records: statuses.len(),
            pass,
            fail,
        },
    };
    Ok(Outcome {
        stdout: to_json(&report),
        summary,
        failed: fail > 0,
    })
}

fn execute(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Psl2 { q, format } => {
            let pp = PrimePower::from_value(*q)?;
            let g = psl2_graph(&pp)?;
            let mut meta = Map::new();
            meta.insert("model".into(), json!(format!("PSL2({q})")));
            meta.insert("components".into(), components_value(&g));
            Ok(Outcome::ok(
                render(&g, meta, *format),
                graph_summary(&format!("PSL2({q})"), &g),
            ))
        }
        Command::Suzuki { m, format } => {
            let g = suzuki_graph(*m)?;
            let label = format!("Sz(2^{})", 2 * m + 1);
            let mut meta = Map::new();
            meta.insert("model".into(), json!(label));
            meta.insert("components".into(), components_value(&g));
            Ok(Outcome::ok(render(&g, meta, *format), graph_summary(&label, &g)))
        }
        Command::Degrees { file, format } => {
            let degrees = parse_degrees(&read_text(file)?)?;
            let g = graph_from_degrees(&degrees)?;
            let mut meta = Map::new();
            meta.insert("degrees".into(), json!(degrees.iter().collect::<Vec<_>>()));
            meta.insert("components".into(), components_value(&g));
            Ok(Outcome::ok(render(&g, meta, *format), graph_summary("degrees", &g)))
        }
        Command::Analyze {
            n,
            input,
            character_graph,
        } => {
            let g = read_document(&read_text(input)?, &input.display().to_string())?;
            let origin = if *character_graph {
                GraphOrigin::CharacterModel
            } else {
                GraphOrigin::Arbitrary
            };
            let report = check_n_exact_as(&g, *n, origin)?;
            let summary = format!(
                "analyze: order {}, clique number {}, {}-exact: {}, class {:?}",
                report.order,
                report.max_clique.len(),
                n,
                report.verdict,
                report.extremal_class
            );
            Ok(Outcome::ok(to_json(&report), summary))
        }
        Command::Search {
            n,
            k,
            alpha_min,
            alpha_max,
        } => {
            let k = parse_k(*n, k)?;
            let result = find_alphas(*n, k, *alpha_min..=*alpha_max)?;
            let alphas: Vec<u32> = result.realizations.iter().map(|p| p.alpha).collect();
            let summary = format!(
                "search: n={n} k={k} alpha in [{alpha_min}, {alpha_max}]: realizations {alphas:?}, {} near misses",
                result.near_misses.len()
            );
            Ok(Outcome::ok(to_json(&result), summary))
        }
        Command::Verify { suite, n, alpha_max } => {
            if !suite {
                return Err(Failure::Usage("verify requires --suite".into()));
            }
            verify_suite(*n, *alpha_max)
        }
        Command::Export { format, input } => {
            let (text, origin) = match input {
                Some(path) => (read_text(path)?, path.display().to_string()),
                None => {
                    let mut buf = String::new();
                    io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
                    (buf, "stdin".to_string())
                }
            };
            let doc = GraphDocument::from_json(&text)
                .map_err(|e| Failure::Usage(format!("{origin} is not a graph document: {e}")))?;
            let g = doc.to_graph()?;
            let canonical = GraphDocument::from_graph(&g, doc.metadata.clone());
            let stdout = match format {
                Format::Json => {
                    let mut s = canonical.to_json();
                    s.push('\n');
                    s
                }
                Format::Dot => canonical.to_dot(),
            };
            Ok(Outcome::ok(stdout, graph_summary("export", &g)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("chargraph").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn psl2_json() {
        let (code, out, err) = run_capture(&["psl2", "64"]);
        assert_eq!(code, EXIT_OK);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["vertices"], json!([2, 3, 5, 7, 13]));
        assert_eq!(v["edges"], json!([[3, 7], [5, 13]]));
        assert_eq!(v["metadata"]["components"], json!([[2], [3, 7], [5, 13]]));
        assert!(err.contains("5 vertices, 2 edges"));
    }

    #[test]
    fn quiet_suppresses_summary() {
        let (code, _, err) = run_capture(&["--quiet", "psl2", "64"]);
        assert_eq!(code, EXIT_OK);
        assert!(err.is_empty());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["psl2", "3"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["psl2", "12"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_USAGE);
        let (code, _, err) = run_capture(&["search", "--n", "5", "--bogus"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--bogus"));
        assert_eq!(run_capture(&["verify"]).0, EXIT_USAGE);
        let (code, _, err) = run_capture(&["search", "--n", "5", "--k", "n-3", "--alpha-max", "95"]);
        assert_eq!(code, EXIT_RANGE);
        assert!(err.contains("90"));
        assert_eq!(run_capture(&["suzuki", "40"]).0, EXIT_RANGE);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn k_parsing() {
        assert!(matches!(parse_k(5, "n-3"), Ok(2)));
        assert!(matches!(parse_k(5, "3"), Ok(3)));
        assert!(parse_k(5, "n-4").is_err());
        assert!(parse_k(2, "n-3").is_err());
    }

    #[test]
    fn degree_file_parsing() {
        let d = parse_degrees("# cd(PSL2(7))\n1\n3\n\n6 # q-1\n7\n8\n").ok().unwrap();
        assert_eq!(d.iter().collect::<Vec<_>>(), vec![1, 3, 6, 7, 8]);
        assert!(parse_degrees("3\nx\n").is_err());
        assert!(parse_degrees("0\n").is_err());
        // 1 is implied
        assert!(parse_degrees("").ok().unwrap().contains(1));
    }

    #[test]
    fn search_output() {
        let (code, out, _) = run_capture(&["search", "--n", "5", "--k", "n-3", "--alpha-max", "12"]);
        assert_eq!(code, EXIT_OK);
        let v: Value = serde_json::from_str(&out).unwrap();
        let alphas: Vec<u64> = v["realizations"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["alpha"].as_u64().unwrap())
            .collect();
        assert_eq!(alphas, vec![6, 9, 11]);
        assert_eq!(v["cases"], json!(["a", "b.i"]));
    }
}
