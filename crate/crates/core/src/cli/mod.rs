//! The `hopfcert` command line tool.
//!
//! Exit codes: 0 all selected suites pass, 1 a check failed, 2 usage error,
//! 3 the instance could not be loaded, 4 a precondition of an explicitly
//! requested suite is missing.

pub mod suites;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopfcore::FinHopfAlgebra;
use crate::instances::catalog::{builtin, list_builtins, Instance};
use crate::instances::format;
use crate::report::{Check, Status};

pub use suites::{run_suite, Outcome, Suite, SuiteReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LOAD: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "hopfcert",
    version,
    about = "Exact verifier for finite-dimensional Hopf *-algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification suites on a built-in instance or an instance file.
    Verify(VerifyArgs),
    /// List built-in instances and their named subalgebras.
    List,
    /// Write a built-in instance in the file format.
    Export {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Built-in name (see `list`) or path to an instance file.
    pub instance: String,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long)]
    pub subalgebra: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub verbose: bool,
}

#[derive(Debug, Serialize)]
struct Canonical<'a> {
    tool: &'static str,
    version: &'static str,
    instance: &'a str,
    dim: usize,
    conductor: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    subalgebra: Option<&'a str>,
    status: Status,
    suites: &'a [SuiteReport],
}

#[derive(Debug, Serialize)]
struct Timing {
    total_ms: f64,
    suites_ms: Vec<(Suite, f64)>,
}

#[derive(Debug, Serialize)]
struct StructuredReport<'a> {
    canonical: Canonical<'a>,
    non_canonical: Timing,
}

/// A loaded instance, or a parsed one whose axioms fail.
enum Loaded {
    Valid(Instance),
    Invalid(Box<FinHopfAlgebra>),
}

fn load(arg: &str) -> Result<Loaded> {
    if list_builtins().iter().any(|e| e.name == arg) {
        return builtin(arg).map(Loaded::Valid);
    }
    let path = Path::new(arg);
    let text = std::fs::read_to_string(path)?;
    let name = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("instance");
    let file = format::parse(name, &text)?;
    if file.hopf.validate().is_err() {
        return Ok(Loaded::Invalid(Box::new(file.hopf)));
    }
    Instance::new(file.hopf, file.subalgebras).map(Loaded::Valid)
}

fn suite_status(reports: &[SuiteReport]) -> Status {
    if reports.iter().any(|r| r.status == Status::Fail) {
        Status::Fail
    } else if reports.iter().all(|r| r.status == Status::Skipped) {
        Status::Skipped
    } else {
        Status::Pass
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skipped",
    }
}

fn render_check(out: &mut String, c: &Check) {
    out.push_str(&format!("  {:<8} {}", status_word(c.status), c.name));
    if let Some(w) = &c.witness {
        if !w.is_empty() {
            out.push_str(&format!("  witness {w:?}"));
        }
    }
    if let Some(d) = &c.detail {
        out.push_str(&format!("  ({d})"));
    }
    out.push('\n');
}

fn render_text(
    h: &FinHopfAlgebra,
    sub: Option<&str>,
    reports: &[SuiteReport],
    verbose: bool,
) -> String {
    let mut out = format!(
        "instance {} (dim {}, conductor {})",
        h.name(),
        h.dim(),
        h.conductor()
    );
    if let Some(s) = sub {
        out.push_str(&format!(", subalgebra {s}"));
    }
    out.push('\n');
    for r in reports {
        out.push_str(&format!("[{}] {}", r.suite.name(), status_word(r.status)));
        if let Some(reason) = &r.reason {
            out.push_str(&format!(": {reason}"));
        }
        out.push('\n');
        for c in &r.checks {
            if verbose || c.status != Status::Pass || c.detail.is_some() {
                render_check(&mut out, c);
            }
        }
    }
    out.push_str(&format!("result: {}\n", status_word(suite_status(reports))));
    out
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Runs `verify`; returns the exit code.
pub fn verify(args: &VerifyArgs) -> i32 {
    let start = Instant::now();
    let loaded = match load(&args.instance) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: cannot load {}: {e}", args.instance);
            return EXIT_LOAD;
        }
    };
    let selected = args.suite.expand();
    let explicit = args.suite != Suite::All;
    let mut reports = Vec::new();
    let mut precondition_failed = false;
    let (h, sub): (Arc<FinHopfAlgebra>, _) = match &loaded {
        Loaded::Invalid(h) => {
            if !selected.contains(&Suite::Axioms) {
                eprintln!("error: cannot load {}: axioms fail", args.instance);
                return EXIT_LOAD;
            }
            (Arc::new((**h).clone()), None)
        }
        Loaded::Valid(inst) => {
            let sub = match &args.subalgebra {
                None => None,
                Some(name) => match inst.subalgebra(name) {
                    Ok(s) => Some(s),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return EXIT_USAGE;
                    }
                },
            };
            (inst.hopf.clone(), sub)
        }
    };
    for suite in selected {
        if matches!(loaded, Loaded::Invalid(_)) && suite != Suite::Axioms {
            reports.push(SuiteReport {
                suite,
                status: Status::Skipped,
                reason: Some("axioms fail".into()),
                checks: Vec::new(),
                elapsed: Default::default(),
            });
            continue;
        }
        let (report, outcome) = run_suite(suite, &h, sub);
        if let Outcome::Precondition(reason) = outcome {
            if explicit {
                eprintln!("error: {} suite: {reason}", suite.name());
                precondition_failed = true;
            }
        }
        reports.push(report);
    }
    let sub_name = args.subalgebra.as_deref();
    let status = suite_status(&reports);
    let text = match args.format {
        Format::Text => render_text(&h, sub_name, &reports, args.verbose),
        Format::Structured => {
            let report = StructuredReport {
                canonical: Canonical {
                    tool: env!("CARGO_PKG_NAME"),
                    version: env!("CARGO_PKG_VERSION"),
                    instance: h.name(),
                    dim: h.dim(),
                    conductor: h.conductor(),
                    subalgebra: sub_name,
                    status,
                    suites: &reports,
                },
                non_canonical: Timing {
                    total_ms: start.elapsed().as_secs_f64() * 1e3,
                    suites_ms: reports
                        .iter()
                        .map(|r| (r.suite, r.elapsed.as_secs_f64() * 1e3))
                        .collect(),
                },
            };
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
    };
    if let Err(e) = emit(&text, args.out.as_deref()) {
        eprintln!("error: {e}");
        return EXIT_LOAD;
    }
    if status == Status::Fail {
        EXIT_CHECK_FAILED
    } else if precondition_failed {
        EXIT_PRECONDITION
    } else {
        EXIT_PASS
    }
}

fn list() -> String {
    let mut out = String::new();
    for e in list_builtins() {
        out.push_str(&format!(
            "{:<8} {}\n         subalgebras: {}\n",
            e.name,
            e.description,
            e.subalgebras.join(", ")
        ));
    }
    out
}

fn export(name: &str, out: Option<&Path>) -> Result<()> {
    let inst = builtin(name)?;
    emit(&inst.to_file_string(), out)
}

/// Parses arguments and runs; returns the process exit code.
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
        }
    };
    match cli.command {
        Command::Verify(args) => verify(&args),
        Command::List => match emit(&list(), None) {
            Ok(()) => EXIT_PASS,
            Err(_) => EXIT_LOAD,
        },
        Command::Export { name, out } => match export(&name, out.as_deref()) {
            Ok(()) => EXIT_PASS,
            Err(e @ Error::UnknownName(_)) => {
                eprintln!("error: {e}");
                EXIT_USAGE
            }
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_LOAD
            }
        },
    }
}
