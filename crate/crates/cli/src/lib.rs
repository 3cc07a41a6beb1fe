//! Command-line front end: parses structured input documents, dispatches to
//! the `relchow` modules and emits reports with a theorem trace.

pub mod error;
pub mod eval;
pub mod input;
pub mod json;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

pub use error::{Category, CliError};
pub use eval::{evaluate, Command, Outcome};

/// Environment variable overriding the oracle size guard.
pub const GUARD_ENV: &str = "RELCHOW_ORACLE_GUARD";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "relchow", version, about = "Chow groups of orders and group rings via structure theorems")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Omit the generation timestamp so output is byte-reproducible.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
    /// Largest algebra (number of elements) the brute-force oracle will scan.
    #[arg(long, global = true, env = GUARD_ENV, default_value_t = relchow::algebra_lab::DEFAULT_ORACLE_LIMIT)]
    pub guard: u64,
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Chow group CH_d of an order.
    Chow {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        dim: u32,
    },
    /// Cycle group Z_d of an order.
    Cycle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        dim: u32,
    },
    /// K_0 decomposition of an hereditary order.
    K0 {
        #[arg(long)]
        input: PathBuf,
    },
    /// Chow group CH_d of a group ring RG.
    #[command(group(ArgGroup::new("source").required(true).args(["group", "input"])))]
    Groupring {
        /// cyclic:n, klein4, sym:k or dihedral:m.
        #[arg(long)]
        group: Option<String>,
        /// Z or Z[zeta_p].
        #[arg(long, default_value = "Z", conflicts_with = "input")]
        ring: String,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        dim: u32,
    },
    /// Class group of an imaginary quadratic field or of Z[zeta_p].
    #[command(group(ArgGroup::new("query").required(true).args(["disc", "cyclotomic", "input"])))]
    Classgroup {
        #[arg(long, allow_hyphen_values = true)]
        disc: Option<i64>,
        #[arg(long)]
        cyclotomic: Option<u64>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Smith normal form U, S, V of an integer matrix.
    Snf {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Brute-force radical and simple-module oracle.
    #[command(group(ArgGroup::new("target").required(true).args(["input", "wedderburn"])))]
    Oracle {
        #[arg(long)]
        input: Option<PathBuf>,
        /// Rational Wedderburn factor count of Q[Cyc_n].
        #[arg(long)]
        wedderburn: Option<u64>,
    },
    /// Verify a middle bracket (or evaluate a boundary map).
    Check {
        #[arg(long)]
        input: PathBuf,
    },
    /// Evaluate every request in a batch file.
    Batch { file: PathBuf },
}

/// One entry of a batch file.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BatchItem {
    command: String,
    #[serde(default)]
    dim: Option<u32>,
    input: Value,
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::new(Category::Io, "io", format!("{}: {e}", path.display())))?;
    input::parse_json(&text).map_err(|e| CliError::new(e.category, e.code, format!("{}: {}", path.display(), e.message)))
}

/// Result of one invocation: the report to print and the exit status.
pub struct Run {
    pub report: Value,
    pub exit_code: i32,
}

/// Evaluates a single request and wraps it in a report.
pub fn run_request(command: Command, dim: Option<u32>, doc: &Value, guard: u64) -> (Value, Option<CliError>) {
    match evaluate(command, dim, doc, guard) {
        Ok(o) => (report::success(command.name(), dim, doc, &o), None),
        Err(e) => (report::failure(command.name(), dim, Some(doc), &e), Some(e)),
    }
}

/// Evaluates a batch; items are independent and keep their input order.
pub fn run_batch(batch: &Value, guard: u64) -> Result<Value, CliError> {
    let items = match batch {
        Value::Array(a) => a.clone(),
        Value::Object(m) if m.len() == 1 && m.get("items").is_some_and(Value::is_array) => {
            m["items"].as_array().cloned().unwrap_or_default()
        }
        _ => return Err(CliError::schema("at $: a batch is an array of requests or {\"items\": [...]}")),
    };
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut reports: Vec<Value> = Vec::with_capacity(items.len());
    for (chunk_index, chunk) in items.chunks(workers).enumerate() {
        let offset = chunk_index * workers;
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunk
                .iter()
                .enumerate()
                .map(|(i, item)| scope.spawn(move || batch_item(offset + i, item, guard)))
                .collect();
            reports.extend(handles.into_iter().map(|h| h.join().expect("batch item panicked")));
        });
    }
    let failed = reports.iter().filter(|r| r["status"] == "error").count();
    Ok(json!({
        "items": reports,
        "summary": { "failed": failed, "succeeded": reports.len() - failed, "total": reports.len() },
    }))
}

fn batch_item(i: usize, item: &Value, guard: u64) -> Value {
    let parsed: Result<BatchItem, CliError> = input::from_value(item, &format!("$[{i}]"));
    let it = match parsed {
        Ok(it) => it,
        Err(e) => return report::failure("?", None, Some(item), &e),
    };
    match Command::parse(&it.command) {
        Some(c) => run_request(c, it.dim, &it.input, guard).0,
        None => report::failure(
            &it.command,
            it.dim,
            Some(&it.input),
            &CliError::usage(format!("unknown command {:?}", it.command)),
        ),
    }
}

fn document_from_flags(kind: &str, payload: Value) -> Value {
    json!({ "kind": kind, "payload": payload })
}

/// Dispatches a parsed command line.
pub fn execute(cli: &Cli) -> Run {
    let single = |command: Command, dim: Option<u32>, doc: Result<Value, CliError>| match doc {
        Ok(doc) => {
            let (report, err) = run_request(command, dim, &doc, cli.guard);
            Run {
                report,
                exit_code: err.map_or(0, |e| e.category.exit_code()),
            }
        }
        Err(e) => Run {
            report: report::failure(command.name(), dim, None, &e),
            exit_code: e.category.exit_code(),
        },
    };
    match &cli.command {
        Cmd::Chow { input, dim } => single(Command::Chow, Some(*dim), read_json(input)),
        Cmd::Cycle { input, dim } => single(Command::Cycle, Some(*dim), read_json(input)),
        Cmd::K0 { input } => single(Command::K0, None, read_json(input)),
        Cmd::Groupring { group, ring, input, dim } => {
            let doc = match (group, input) {
                (_, Some(path)) => read_json(path),
                (Some(name), None) => input::ring_flag(ring)
                    .map(|base| document_from_flags("groupring", json!({ "group": { "named": name }, "base": base }))),
                (None, None) => Err(CliError::usage("--group or --input is required")),
            };
            single(Command::Groupring, Some(*dim), doc)
        }
        Cmd::Classgroup { disc, cyclotomic, input } => {
            let doc = match (disc, cyclotomic, input) {
                (Some(d), _, _) => Ok(document_from_flags("classgroup-query", json!({ "discriminant": d }))),
                (_, Some(p), _) => Ok(document_from_flags("classgroup-query", json!({ "cyclotomic": p }))),
                (_, _, Some(path)) => read_json(path),
                _ => Err(CliError::usage("one of --disc, --cyclotomic, --input is required")),
            };
            single(Command::Classgroup, None, doc)
        }
        Cmd::Snf { matrix } => single(Command::Snf, None, read_json(matrix)),
        Cmd::Oracle { input, wedderburn } => match (input, wedderburn) {
            (Some(path), _) => single(Command::Oracle, None, read_json(path)),
            (None, Some(n)) => {
                let echo = json!({ "wedderburn": n });
                match eval::wedderburn(*n) {
                    Ok(o) => Run {
                        report: report::success("oracle", None, &echo, &o),
                        exit_code: 0,
                    },
                    Err(e) => Run {
                        report: report::failure("oracle", None, Some(&echo), &e),
                        exit_code: e.category.exit_code(),
                    },
                }
            }
            (None, None) => single(Command::Oracle, None, Err(CliError::usage("--input or --wedderburn is required"))),
        },
        Cmd::Check { input } => single(Command::Check, None, read_json(input)),
        Cmd::Batch { file } => match read_json(file).and_then(|b| run_batch(&b, cli.guard)) {
            Ok(report) => Run { report, exit_code: 0 },
            Err(e) => Run {
                report: report::failure("batch", None, None, &e),
                exit_code: e.category.exit_code(),
            },
        },
    }
}

/// Full entry point: parse `args`, evaluate, write the report to `out` and
/// diagnostics to `err`. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let Run { mut report, exit_code } = execute(&cli);
    if !cli.no_timestamp {
        let secs = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
        report["generated_at"] = secs.into();
    }
    let text = match cli.format {
        Format::Json => report::to_json_text(&report),
        Format::Text => report::to_text(&report),
    };
    let _ = out.write_all(text.as_bytes());
    if exit_code != 0 {
        if let Some(e) = report.get("error") {
            let _ = writeln!(err, "relchow: error [{}]: {}", e["code"].as_str().unwrap_or(""), e["message"].as_str().unwrap_or(""));
        }
    }
    exit_code
}
