//! Executes a parsed [`RunConfig`] and writes its artifacts.

use std::fs;
use std::io::Write;
use std::path::Path;

use gramp_core::grover::grover_iterate;
use gramp_core::optimal::{amplify_at, amplify_optimal, theta_sweep};
use gramp_core::search::{compare_with_grover, default_max_steps, one_step_search};
use gramp_core::{SearchProblem, StateVector};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::{Command, RunConfig, ThetaArg, VectorSource};
use crate::verify::{run_suite, VerifyReport};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] gramp_core::Error),
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    /// 1 for verification failures, 2 for usage and input problems.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            _ => 2,
        }
    }
}

/// JSON artifact of `gramp search`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    pub marked: usize,
    pub found_index: usize,
    pub amplitude: f64,
}

pub fn run(config: &RunConfig, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &config.command {
        Command::Amplify(args) => {
            let a = load_source(&args.source)?;
            let (out, report) = match args.theta {
                ThetaArg::Auto => amplify_optimal(&a, args.signs)?,
                ThetaArg::Fixed(theta) => amplify_at(&a, theta, args.signs)?,
            };
            let report_json = report.to_json()?;
            let state_json = out.to_json()?;
            emit(args.output.as_deref(), &report_json, stdout)?;
            if let Some(path) = &args.state_out {
                write_file(path, &state_json)?;
            }
        }
        Command::Sweep(args) => {
            let a = load_source(&args.source)?;
            let sweep = theta_sweep(&a, args.signs, args.points)?;
            emit(args.output.as_deref(), &sweep.to_csv(), stdout)?;
        }
        Command::Grover(args) => {
            let a = load_source(&args.source)?;
            let steps = args.max_steps.unwrap_or_else(|| default_max_steps(a.dim()));
            emit(args.output.as_deref(), &grover_iterate(&a, steps).to_csv(), stdout)?;
        }
        Command::Search(args) => {
            let problem = SearchProblem::new(args.n, args.marked)?;
            let found = one_step_search(&problem)?;
            let report = SearchReport {
                n: args.n,
                marked: args.marked,
                found_index: found.found_index,
                amplitude: found.amplitude,
            };
            emit(args.output.as_deref(), &to_json(&report)?, stdout)?;
        }
        Command::Compare(args) => {
            let problem = SearchProblem::new(args.n, args.marked)?;
            let steps = args.max_steps.unwrap_or_else(|| default_max_steps(args.n));
            let report = compare_with_grover(&problem, steps)?;
            emit(args.output.as_deref(), &report.to_json()?, stdout)?;
        }
        Command::Verify(args) => {
            let report = run_suite(args.n, args.seed, args.cases)?;
            emit(args.output.as_deref(), &to_json(&report)?, stdout)?;
            if !report.passed {
                return Err(CliError::Verification(failure_summary(&report)));
            }
        }
    }
    Ok(())
}

fn failure_summary(report: &VerifyReport) -> String {
    report
        .failures()
        .map(|c| format!("{} (max error {:e} > {:e})", c.name, c.max_error, c.tolerance))
        .collect::<Vec<_>>()
        .join(", ")
}

fn load_source(source: &VectorSource) -> Result<StateVector, CliError> {
    match (&source.input, source.n) {
        (Some(path), n) => {
            let a = StateVector::load(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            if let Some(n) = n {
                if n != a.dim() {
                    return Err(CliError::Input(format!(
                        "--n {n} does not match the {}-dimensional input vector",
                        a.dim()
                    )));
                }
            }
            Ok(a)
        }
        (None, Some(n)) => Ok(StateVector::uniform(n)?),
        (None, None) => Err(CliError::Input("either --input or --n is required".into())),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map_err(|e| CliError::Input(e.to_string()))
}

fn emit(path: Option<&Path>, contents: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, contents),
        None => {
            let mut text = contents.to_string();
            if !text.ends_with('\n') {
                text.push('\n');
            }
            stdout.write_all(text.as_bytes()).map_err(|source| CliError::Write {
                path: "<stdout>".into(),
                source,
            })
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    let mut text = contents.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    fs::write(path, text).map_err(|source| CliError::Write {
        path: path.display().to_string(),
        source,
    })
}
