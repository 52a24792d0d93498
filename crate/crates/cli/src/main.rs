//! `snhom`: task files in, deterministic reports out.
//!
//! Exit codes: 0 success, 1 a checked identity failed, 2 invalid input,
//! 3 resource limit, 4 internal error.

mod compute;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use snhom_core::complexes::ComplexError;
use snhom_core::groups::{GroupError, Limits};
use snhom_core::hearts::HeartError;
use snhom_core::io::{parse_task, resolve, IoError};
use snhom_core::laws::{run_suite, Suite};
use snhom_core::sn::SnError;
use snhom_core::LinalgError;

use compute::Settings;
use report::{error_json, to_text, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "snhom", version, about = "Exact homological algebra of pair spaces and finite-group coefficients")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json", env = "SNHOM_FORMAT")]
    format: Format,
    /// Top degree for group homology when the task gives no window.
    #[arg(long, global = true, default_value_t = 3, env = "SNHOM_MAX_DEGREE")]
    max_degree: usize,
    /// Cap on |G|^(n+1)·dim M for bar complexes.
    #[arg(long, global = true, default_value_t = 100_000, env = "SNHOM_RESOURCE_CAP")]
    resource_cap: u128,
    /// Cap on group order.
    #[arg(long, global = true, default_value_t = 12, env = "SNHOM_MAX_ORDER")]
    max_order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the operation named in a task file.
    Compute { file: PathBuf },
    /// Long exact sequence of ℓ¹-homology for the task's `sequence` argument.
    Les { file: PathBuf },
    /// Duality between homology and bounded cohomology for the task's `module` argument.
    Duality { file: PathBuf },
    /// Run a seeded law suite (or `all`).
    CheckLaws {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        /// Also write the first failing instance to this path.
        #[arg(long)]
        emit_failure: Option<PathBuf>,
    },
}

/// Exit code and error kind for a failure, by the first typed error in the chain.
fn classify(err: &anyhow::Error) -> (i32, &'static str) {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<IoError>() {
            return if e.is_resource_limit() { (3, "resource_limit") } else { (2, "validation") };
        }
        if let Some(e) = cause.downcast_ref::<GroupError>() {
            return match e {
                GroupError::ResourceLimit { .. } | GroupError::OrderCap { .. } => (3, "resource_limit"),
                GroupError::InternalInconsistency(_) => (4, "internal"),
                _ => (2, "validation"),
            };
        }
        if let Some(e) = cause.downcast_ref::<HeartError>() {
            return match e {
                HeartError::InternalInconsistency(_) => (4, "internal"),
                _ => (2, "validation"),
            };
        }
        if cause.downcast_ref::<SnError>().is_some()
            || cause.downcast_ref::<ComplexError>().is_some()
            || cause.downcast_ref::<LinalgError>().is_some()
            || cause.downcast_ref::<std::io::Error>().is_some()
        {
            return (2, "validation");
        }
    }
    (4, "internal")
}

fn detail(err: &anyhow::Error) -> Value {
    for cause in err.chain() {
        match cause.downcast_ref::<IoError>() {
            Some(IoError::Syntax { line, column, .. }) => return json!({ "line": line, "column": column }),
            Some(IoError::Unresolved(names)) => return json!({ "unresolved": names }),
            Some(IoError::Invalid { at, .. }) => return json!({ "at": at }),
            _ => {}
        }
    }
    Value::Null
}

fn task_report(command: &str, file: &PathBuf, op: Option<&str>, s: &Settings) -> Result<Report> {
    let bytes = compute::read(file)?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|e| IoError::Syntax { line: 1, column: 1, message: format!("input is not UTF-8: {e}") })?;
    let mut resolved = resolve(&parse_task(&text)?, &s.limits)?;
    if let Some(op) = op {
        compute::force_op(&mut resolved, op);
    }
    let mut report = Report::new(command, &resolved.task.op, &bytes);
    compute::run(&resolved, s, &mut report)?;
    Ok(report)
}

fn laws_report(suite: &str, seed: u64, cases: usize, s: &Settings) -> Result<(Report, Option<Value>)> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        let known: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        vec![Suite::from_name(suite).ok_or_else(|| IoError::Invalid {
            at: "--suite".into(),
            message: format!("unknown suite {suite:?}; expected all or one of {}", known.join(", ")),
        })?]
    };
    let input = format!("check-laws suite={suite} seed={seed} cases={cases}");
    let mut report = Report::new("check-laws", suite, input.as_bytes());
    let mut first_failure = None;
    for su in suites {
        let r = run_suite(su, seed, cases, &s.limits);
        report.check(format!("suite {}", su.name()), r.passed);
        let failed: Vec<Value> = r
            .failed
            .iter()
            .map(|c| json!({ "index": c.index, "failures": c.failures, "instance": c.instance }))
            .collect();
        if first_failure.is_none() {
            first_failure = r.failed.first().and_then(|c| c.instance.as_ref()).map(|t| json!(t));
        }
        report.results.push(json!({
            "suite": su.name(),
            "seed": seed,
            "cases": cases,
            "passed": r.passed,
            "checks": r.checks,
            "witnesses": r.witnesses,
            "failed": failed,
        }));
    }
    Ok((report, first_failure))
}

fn emit(value: &Value, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("json values serialize")),
        Format::Text => print!("{}", to_text(value)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = Settings {
        max_degree: cli.max_degree,
        limits: Limits { resource_cap: cli.resource_cap, max_order: cli.max_order },
    };
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Compute { file } => task_report("compute", file, None, &settings).map(|r| (r, None)),
        Command::Les { file } => task_report("les", file, Some("les"), &settings).map(|r| (r, None)),
        Command::Duality { file } => task_report("duality", file, Some("duality"), &settings).map(|r| (r, None)),
        Command::CheckLaws { suite, seed, cases, .. } => laws_report(suite, *seed, *cases, &settings),
    };
    match outcome {
        Ok((report, failure)) => {
            let elapsed = start.elapsed().as_secs_f64() * 1000.0;
            emit(&report.to_json(elapsed), cli.format);
            if let (Command::CheckLaws { emit_failure: Some(path), .. }, Some(task)) = (&cli.command, failure) {
                let text = serde_json::to_string_pretty(&task).expect("json values serialize");
                if let Err(e) = std::fs::write(path, text + "\n") {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(if report.passed() { 0 } else { 1 })
        }
        Err(err) => {
            let (code, kind) = classify(&err);
            let message = format!("{err:#}");
            eprintln!("error: {message}");
            if cli.format == Format::Json {
                emit(&error_json(kind, code, &message, detail(&err)), cli.format);
            }
            ExitCode::from(code as u8)
        }
    }
}

