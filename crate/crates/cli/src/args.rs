use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polyhopf::verify::Suite;
use polyhopf::AlgebraTag;

/// Seeded ensembles and property checks for polygon spaces built from
/// Hopf maps over ℝ, ℂ, ℍ and 𝕆.
#[derive(Debug, Parser)]
#[command(name = "polyhopf", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample closed unit-perimeter polygons from random Stiefel frames.
    Sample(SampleArgs),
    /// Run the property suites and print a JSON report.
    Verify(VerifyArgs),
    /// Lift every polygon of an ensemble to a Stiefel frame.
    Lift(LiftArgs),
    /// Apply one seeded group element to every polygon of an ensemble.
    Act(ActArgs),
    /// Edge-length histogram of an ensemble as CSV.
    Stats(StatsArgs),
}

fn algebra(s: &str) -> Result<AlgebraTag, String> {
    s.parse().map_err(|e: polyhopf::Error| e.to_string())
}

fn suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: polyhopf::verify::UnknownSuite| e.to_string())
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        Ok(_) => Err(format!("tolerance must be positive, got {s}")),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long, value_parser = algebra)]
    pub algebra: AlgebraTag,
    /// Number of edges.
    #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
    pub k: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub count: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = suite)]
    pub suite: Suite,
    /// Trials per property, overriding the per-property defaults.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Tolerance for composite expressions.
    #[arg(long, value_parser = positive)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Flip the sign of the e1·e2 table entry before running.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Args)]
pub struct LiftArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Draw random fiber parameters from this seed instead of θ = 1.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Action {
    Identity,
    /// A random rotation of ℝⁿ applied to the edges.
    Rotation,
    /// SU(2, F) for R, C, H or a generator word for O, applied to lifted frames.
    Spin,
}

#[derive(Debug, Args)]
pub struct ActArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Action::Rotation)]
    pub action: Action,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Generator word length for the octonion spin action (implies `--action spin`).
    #[arg(long)]
    pub word_length: Option<usize>,
    /// Expected algebra of the input ensemble.
    #[arg(long, value_parser = algebra)]
    pub algebra: Option<AlgebraTag>,
    /// Bound on the Gram-matrix deviation.
    #[arg(long, value_parser = positive)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub bins: u64,
}
