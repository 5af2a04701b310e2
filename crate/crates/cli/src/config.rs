//! Command-line configuration.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use gramp_core::SignChoice;

#[derive(Debug, Clone, Parser)]
#[command(name = "gramp", version, about = "Generalized Grover amplifiers: amplify, sweep, search, verify")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Apply a family member (fixed angle or the optimal one) to a state vector.
    Amplify(AmplifyArgs),
    /// Target amplitude over evenly spaced angles, as CSV.
    Sweep(SweepArgs),
    /// Textbook Grover iteration trace, as CSV.
    Grover(GroverArgs),
    /// One-step search for a marked item.
    Search(SearchArgs),
    /// One-step search against repeated Grover iteration.
    Compare(CompareArgs),
    /// Seeded randomized invariant suite; exits 1 on any violation.
    Verify(VerifyArgs),
}

/// Where the input vector comes from: a JSON file, or the uniform vector of dimension `--n`.
#[derive(Debug, Clone, Args)]
pub struct VectorSource {
    /// State vector JSON file (`{"n": .., "amplitudes": [..]}`).
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    /// Dimension; with no input file the uniform vector of this size is used.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct AmplifyArgs {
    #[command(flatten)]
    pub source: VectorSource,
    /// Angle in radians, or `auto` for the optimal angle.
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    pub theta: ThetaArg,
    #[arg(long, default_value = "1,1,1,1,1", allow_hyphen_values = true)]
    pub signs: SignChoice,
    /// Report JSON path (stdout when absent).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Output state vector JSON path.
    #[arg(long)]
    pub state_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub source: VectorSource,
    #[arg(long, default_value = "1,1,1,1,1", allow_hyphen_values = true)]
    pub signs: SignChoice,
    #[arg(long, default_value_t = 1000)]
    pub points: usize,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GroverArgs {
    #[command(flatten)]
    pub source: VectorSource,
    /// Number of iterations (default `ceil(2√N)`).
    #[arg(long)]
    pub max_steps: Option<usize>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub marked: usize,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub marked: usize,
    /// Grover step budget (default `ceil(2√N)`).
    #[arg(long)]
    pub max_steps: Option<usize>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Random cases per check.
    #[arg(long, default_value_t = 100)]
    pub cases: usize,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ThetaArg {
    Auto,
    Fixed(f64),
}

impl FromStr for ThetaArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(ThetaArg::Auto);
        }
        match s.parse::<f64>() {
            Ok(t) if t.is_finite() => Ok(ThetaArg::Fixed(t)),
            _ => Err(format!("expected `auto` or a finite angle in radians, got {s:?}")),
        }
    }
}
