//! `symsugeno`: compute symmetric Sugeno and Choquet integrals from problem
//! files, and run the law verification suites.
//!
//! Every command prints line-delimited JSON records. Exit status is 0 on
//! success, 1 when an input cannot be read or parsed and 2 when it parses but
//! is invalid (non-monotone capacity, value outside the scale, an output
//! that does not apply, bad flag combination).

mod compute;
mod problem;

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use symsugeno::prelude::*;
use symsugeno::verify::{self, Mode, VerifyConfig, VerifyError};

use crate::compute::{Request, OUTPUTS};
use crate::problem::Problem;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Validation(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Validation(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "symsugeno", version, about = "Symmetric Sugeno and Choquet integrals on ordinal and unit scales")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute integrals and the Möbius interval of a problem file.
    Compute {
        #[arg(long)]
        input: PathBuf,
        /// Rule for the canonical ordinal Möbius transform.
        #[arg(long)]
        rule: Option<AggregationRule>,
        /// Möbius representative used by the first variant.
        #[arg(long)]
        mobius: Option<MobiusRepresentative>,
        /// Every output that applies; the others are reported as skipped.
        #[arg(long, conflicts_with = "only")]
        all: bool,
        /// Comma-separated outputs, each of which must apply.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
    },
    /// Print the lower and upper ordinal Möbius tables of the capacity.
    Mobius {
        #[arg(long)]
        input: PathBuf,
        /// Rule for the canonical transform.
        #[arg(long)]
        rule: Option<AggregationRule>,
    },
    /// Check the algebraic laws on enumerated or sampled instances.
    Verify {
        /// Number of players.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Top level K of the ordinal scale {0, …, K}.
        #[arg(long, default_value_t = 3)]
        levels: u32,
        /// Enumerate every instance (the default unless --samples is given).
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run a single law.
        #[arg(long)]
        law: Option<String>,
        /// List the laws and exit.
        #[arg(long)]
        list: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute { input, rule, mobius, all, only } => run_compute(&input, rule, mobius, all, only),
        Command::Mobius { input, rule } => run_mobius(&input, rule),
        Command::Verify { n, levels, exhaustive: _, samples, seed, law, list } => {
            run_verify(n, levels, samples, seed, law.as_deref(), list)
        }
    };
    match outcome.and_then(|records| emit(&records)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("symsugeno: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn emit(records: &[Value]) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    for record in records {
        writeln!(out, "{record}").map_err(|e| CliError::Parse(format!("cannot write output: {e}")))?;
    }
    Ok(())
}

fn read_problem(path: &Path) -> Result<problem::ParsedProblem, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    problem::parse(&text)
}

fn option_or<T: std::str::FromStr>(flag: Option<T>, file: Option<&String>, default: T) -> Result<T, CliError>
where
    T::Err: std::fmt::Display,
{
    match (flag, file) {
        (Some(value), _) => Ok(value),
        (None, Some(text)) => text.parse().map_err(|e: T::Err| CliError::Validation(e.to_string())),
        (None, None) => Ok(default),
    }
}

fn run_compute(
    input: &Path,
    rule: Option<AggregationRule>,
    mobius: Option<MobiusRepresentative>,
    all: bool,
    only: Option<Vec<String>>,
) -> Result<Vec<Value>, CliError> {
    let parsed = read_problem(input)?;
    let options = &parsed.options;
    let (outputs, lenient) = match (only, all, &options.outputs) {
        (Some(names), _, _) => (compute::parse_outputs(&names)?, false),
        (None, true, _) => (OUTPUTS.to_vec(), true),
        (None, false, Some(names)) => (compute::parse_outputs(names)?, false),
        (None, false, None) => return Err(CliError::Validation("choose outputs with --all or --only".into())),
    };
    let request = Request {
        outputs,
        lenient,
        rule: option_or(rule, options.rule.as_ref(), AggregationRule::Floor)?,
        representative: option_or(mobius, options.mobius.as_ref(), MobiusRepresentative::Lower)?,
    };
    compute::compute(&parsed.problem, &request)
}

fn run_mobius(input: &Path, rule: Option<AggregationRule>) -> Result<Vec<Value>, CliError> {
    let parsed = read_problem(input)?;
    let rule = option_or(rule, parsed.options.rule.as_ref(), AggregationRule::Floor)?;
    match &parsed.problem {
        Problem::Levels(inst) => mobius_records(&inst.players, &inst.capacity, rule),
        Problem::Unit(inst) => mobius_records(&inst.players, &inst.capacity, rule),
    }
}

fn mobius_records<S: Scale>(
    players: &problem::Players,
    v: &Capacity<S>,
    rule: AggregationRule,
) -> Result<Vec<Value>, CliError> {
    let interval = ordinal_mobius_interval(v);
    let scale = v.scale();
    let mut records = vec![
        json!({ "table": "lower", "values": compute::table(players, scale, &interval.lower) }),
        json!({ "table": "upper", "values": compute::table(players, scale, &interval.upper) }),
    ];
    let canonical = canonical_ordinal_mobius(&v.to_set_function(), rule).map_err(|e| CliError::Validation(e.to_string()))?;
    records.push(json!({
        "table": "canonical",
        "rule": rule.name(),
        "values": compute::table(players, scale, &canonical),
    }));
    Ok(records)
}

fn run_verify(
    n: usize,
    levels: u32,
    samples: Option<u64>,
    seed: u64,
    law: Option<&str>,
    list: bool,
) -> Result<Vec<Value>, CliError> {
    if list {
        return Ok(verify::laws().map(|(law, summary)| json!({ "law": law, "summary": summary })).collect());
    }
    let mode = match samples {
        Some(samples) => Mode::Sampled { samples, seed },
        None => Mode::Exhaustive,
    };
    let config = VerifyConfig { n, levels, mode };
    let reports = verify::run(&config, law).map_err(|e| match e {
        VerifyError::UnknownLaw(_) | VerifyError::BadConfig(_) => CliError::Validation(e.to_string()),
    })?;
    Ok(reports
        .into_iter()
        .map(|r| {
            json!({
                "law": r.law,
                "status": r.status.name(),
                "checked": r.checked,
                "detail": r.detail,
            })
        })
        .collect())
}
