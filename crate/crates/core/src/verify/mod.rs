//! Seeded property suites. Each property runs a number of independent
//! trials, trial `t` drawing from its own ChaCha stream, and records the
//! largest residual seen against a fixed tolerance.

mod algebra;
mod hopf;
mod polygon;
mod spin;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::algebra::{StructureTable, OCTONION_TABLE};
use crate::random::{substream, SeededRng};
use crate::tolerance::Tolerances;

pub use algebra::algebra_suite_with_table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Algebra,
    Hopf,
    Spin,
    Polygon,
    All,
}

impl Suite {
    pub const EACH: [Suite; 4] = [Suite::Algebra, Suite::Hopf, Suite::Spin, Suite::Polygon];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Hopf => "hopf",
            Suite::Spin => "spin",
            Suite::Polygon => "polygon",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownSuite;

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected one of algebra, hopf, spin, polygon, all")
    }
}

impl FromStr for Suite {
    type Err = UnknownSuite;
    fn from_str(s: &str) -> Result<Self, UnknownSuite> {
        match s {
            "algebra" => Ok(Suite::Algebra),
            "hopf" => Ok(Suite::Hopf),
            "spin" => Ok(Suite::Spin),
            "polygon" => Ok(Suite::Polygon),
            "all" => Ok(Suite::All),
            _ => Err(UnknownSuite),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Overrides every property's default trial count.
    pub trials: Option<usize>,
    pub tolerances: Tolerances,
    /// Name prefixes of the properties to run; empty runs everything.
    pub only: Vec<String>,
}

impl VerifyConfig {
    pub fn new(seed: u64) -> Self {
        VerifyConfig { seed, trials: None, tolerances: Tolerances::DEFAULT, only: Vec::new() }
    }

    pub fn with_only(self, prefixes: &[&str]) -> Self {
        VerifyConfig { only: prefixes.iter().map(|&p| p.into()).collect(), ..self }
    }

    fn selects(&self, name: &str) -> bool {
        self.only.is_empty() || self.only.iter().any(|p| name.starts_with(p.as_str()))
    }

    pub fn with_trials(self, trials: usize) -> Self {
        VerifyConfig { trials: Some(trials), ..self }
    }

    pub fn with_tolerances(self, tolerances: Tolerances) -> Self {
        VerifyConfig { tolerances, ..self }
    }

    fn trials_or(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self::new(0)
    }
}

/// The first trial whose residual exceeded the tolerance. Rerunning with
/// the same seed reproduces it; `stream` is the ChaCha stream it used.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Failure {
    pub trial: usize,
    pub stream: u64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyResult {
    pub suite: Suite,
    pub name: String,
    pub trials: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub seed: u64,
    pub failure: Option<Failure>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub results: Vec<PropertyResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(PropertyResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    pub fn get(&self, name: &str) -> Option<&PropertyResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

fn fnv1a(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Runs `trial` `trials` times, or not at all if the config filters the
/// property out. A NaN residual counts as a failure.
pub(crate) fn check(
    suite: Suite,
    name: String,
    trials: usize,
    tolerance: f64,
    config: &VerifyConfig,
    mut trial: impl FnMut(&mut SeededRng) -> f64,
) -> Option<PropertyResult> {
    if !config.selects(&name) {
        return None;
    }
    let seed = config.seed;
    let base = fnv1a(&name);
    let mut max_residual: f64 = 0.0;
    let mut failure = None;
    for t in 0..trials {
        let stream = base.wrapping_add(t as u64);
        let r = trial(&mut substream(seed, stream));
        max_residual = max_residual.max(if r.is_nan() { f64::INFINITY } else { r });
        if (r.is_nan() || r > tolerance) && failure.is_none() {
            failure = Some(Failure { trial: t, stream, residual: r });
        }
    }
    Some(PropertyResult { suite, name, trials, max_residual, tolerance, seed, failure })
}

/// Residual relative to `scale`, guarding tiny scales.
pub(crate) fn rel(err: f64, scale: f64) -> f64 {
    err / scale.max(f64::MIN_POSITIVE)
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Report {
    run_suite_with_table(suite, config, &OCTONION_TABLE)
}

/// Like [`run_suite`], with the algebra suite multiplying through `table`
/// in place of the canonical octonion table.
pub fn run_suite_with_table(suite: Suite, config: &VerifyConfig, table: &StructureTable) -> Report {
    let suites = if suite == Suite::All { &Suite::EACH[..] } else { core::slice::from_ref(&suite) };
    let mut results = Vec::new();
    for s in suites {
        match s {
            Suite::Algebra => results.extend(algebra_suite_with_table(table, config)),
            Suite::Hopf => results.extend(hopf::hopf_suite(config)),
            Suite::Spin => results.extend(spin::spin_suite(config)),
            Suite::Polygon => results.extend(polygon::polygon_suite(config)),
            Suite::All => unreachable!("expanded above"),
        }
    }
    Report { results }
}
