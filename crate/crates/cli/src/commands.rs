use std::fmt::Write as _;
use std::path::Path;

use polyhopf::algebra::OCTONION_TABLE;
use polyhopf::polygons::{sample_polygon, su2_apply_frame, word_apply_frame};
use polyhopf::random::{substream, unit_element};
use polyhopf::verify::{run_suite_with_table, PropertyResult, Report, Suite, VerifyConfig};
use polyhopf::{
    lift, phi_k, quotient_invariant, rotate_polygon, su2_random, AlgebraTag, Error, GeneratorWord, PolygonConfig,
    Rotation, Tolerances,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{ActArgs, Action, Command, LiftArgs, SampleArgs, StatsArgs, VerifyArgs};
use crate::error::{CliError, Result};
use crate::format::{read_json, to_json, write_output, Ensemble, FrameEnsemble};

pub const TOL_ENV: &str = "POLYHOPF_DEFAULT_TOL";
pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_WORD_LENGTH: usize = 4;

/// `--tol`, else `POLYHOPF_DEFAULT_TOL`, else 1e-9.
pub fn resolve_tol(flag: Option<f64>) -> Result<f64> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var(TOL_ENV) {
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
            _ => Err(CliError::Usage(format!("{TOL_ENV} must be a positive number, got {s:?}"))),
        },
        Err(_) => Ok(DEFAULT_TOL),
    }
}

pub fn run(command: Command) -> Result<()> {
    match command {
        Command::Sample(a) => sample(&a),
        Command::Verify(a) => verify(&a),
        Command::Lift(a) => lift_ensemble(&a),
        Command::Act(a) => act(&a),
        Command::Stats(a) => stats(&a),
    }
}

/// Prints to stdout, or to stderr when stdout carries the payload.
fn summary(out: Option<&Path>, line: &str) {
    if out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

fn max_closure(polygons: &[PolygonConfig]) -> f64 {
    polygons.iter().map(PolygonConfig::closure_residual).fold(0.0, f64::max)
}

pub fn sample(a: &SampleArgs) -> Result<()> {
    let k = a.k as usize;
    let polygons = (0..a.count)
        .into_par_iter()
        .map(|i| sample_polygon(a.algebra, k, a.seed, i))
        .collect::<polyhopf::Result<Vec<_>>>()?;
    write_output(a.out.as_deref(), &to_json(&Ensemble::new(a.algebra, k, a.seed, &polygons))?)?;
    let edges: f64 = polygons.iter().flat_map(|p| p.edges()).map(|e| e.norm()).sum();
    summary(
        a.out.as_deref(),
        &format!(
            "{} polygons, algebra {}, k = {k}, n = {}: mean edge length {:.6e}, max closure residual {:.3e}",
            polygons.len(),
            a.algebra.symbol(),
            a.algebra.euclidean_dim(),
            edges / (polygons.len() * k) as f64,
            max_closure(&polygons)
        ),
    );
    Ok(())
}

#[derive(Serialize)]
struct FailureJson {
    trial: usize,
    stream: u64,
    residual: f64,
}

#[derive(Serialize)]
struct PropertyJson<'a> {
    suite: &'static str,
    name: &'a str,
    trials: usize,
    max_residual: f64,
    tolerance: f64,
    passed: bool,
    failure: Option<FailureJson>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    seed: u64,
    passed: bool,
    properties: Vec<PropertyJson<'a>>,
}

fn property_json(r: &PropertyResult) -> PropertyJson<'_> {
    PropertyJson {
        suite: r.suite.name(),
        name: &r.name,
        trials: r.trials,
        max_residual: r.max_residual,
        tolerance: r.tolerance,
        passed: r.passed(),
        failure: r.failure.as_ref().map(|f| FailureJson { trial: f.trial, stream: f.stream, residual: f.residual }),
    }
}

pub fn run_verify(suite: Suite, config: &VerifyConfig, inject_fault: bool) -> Report {
    let table = if inject_fault { OCTONION_TABLE.with_flipped_sign(1, 2) } else { OCTONION_TABLE };
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let results = suites
        .par_iter()
        .map(|&s| run_suite_with_table(s, config, &table).results)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Report { results }
}

pub fn verify(a: &VerifyArgs) -> Result<()> {
    let tol = resolve_tol(a.tol)?;
    let mut config = VerifyConfig::new(a.seed).with_tolerances(Tolerances::DEFAULT.with_composite(tol));
    if let Some(t) = a.trials {
        config = config.with_trials(t as usize);
    }
    let report = run_verify(a.suite, &config, a.inject_fault);
    let json = ReportJson {
        seed: a.seed,
        passed: report.passed(),
        properties: report.results.iter().map(property_json).collect(),
    };
    write_output(a.out.as_deref(), &to_json(&json)?)?;
    if report.passed() {
        summary(a.out.as_deref(), &format!("{} properties passed (seed {})", report.results.len(), a.seed));
        return Ok(());
    }
    let mut msg = String::from("verification failed:");
    for r in report.failures() {
        write!(msg, "\n  {} ({} suite): max residual {:.3e} > tol {:.0e}", r.name, r.suite, r.max_residual, r.tolerance).unwrap();
        if let Some(f) = &r.failure {
            write!(msg, ", first at trial {} (stream {})", f.trial, f.stream).unwrap();
        }
        write!(msg, "; reproduce with --suite {} --seed {}", r.suite, r.seed).unwrap();
    }
    Err(CliError::Failed(msg))
}

pub fn lift_ensemble(a: &LiftArgs) -> Result<()> {
    let ensemble: Ensemble = read_json(&a.input)?;
    let tag = ensemble.tag()?;
    let polygons = ensemble.configs()?;
    let frames = polygons
        .par_iter()
        .enumerate()
        .map(|(i, p)| match a.seed {
            None => lift(p, None),
            Some(seed) => {
                let mut rng = substream(seed, i as u64);
                let thetas: Vec<_> = (0..p.k()).map(|_| unit_element(tag, &mut rng)).collect();
                lift(p, Some(&thetas))
            }
        })
        .collect::<polyhopf::Result<Vec<_>>>()?;
    let max_round_trip = frames
        .iter()
        .zip(&polygons)
        .map(|(f, p)| phi_k(f).map(|q| q.distance(p)))
        .collect::<polyhopf::Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    write_output(a.out.as_deref(), &to_json(&FrameEnsemble::new(tag, ensemble.k, a.seed.unwrap_or(ensemble.seed), &frames))?)?;
    summary(a.out.as_deref(), &format!("{} frames, max round-trip error {:.3e}", frames.len(), max_round_trip));
    Ok(())
}

fn act_on(tag: AlgebraTag, a: &ActArgs, action: Action, polygons: &[PolygonConfig]) -> Result<Vec<PolygonConfig>> {
    let n = tag.euclidean_dim();
    let mut rng = substream(a.seed, 0);
    match action {
        Action::Identity => Ok(polygons.to_vec()),
        Action::Rotation => {
            let r = Rotation::random(n, &mut rng);
            Ok(polygons.iter().map(|p| rotate_polygon(&r, p)).collect::<polyhopf::Result<_>>()?)
        }
        Action::Spin if tag == AlgebraTag::Octonion => {
            let word = GeneratorWord::random(a.word_length.unwrap_or(DEFAULT_WORD_LENGTH), &mut rng);
            let image = |p: &PolygonConfig| phi_k(&word_apply_frame(&word, &lift(p, None)?)?);
            Ok(polygons.par_iter().map(image).collect::<polyhopf::Result<_>>()?)
        }
        Action::Spin => {
            let g = su2_random(tag, a.seed)?;
            let image = |p: &PolygonConfig| phi_k(&su2_apply_frame(&g, &lift(p, None)?)?);
            Ok(polygons.par_iter().map(image).collect::<polyhopf::Result<_>>()?)
        }
    }
}

pub fn act(a: &ActArgs) -> Result<()> {
    let tol = resolve_tol(a.tol)?;
    let ensemble: Ensemble = read_json(&a.input)?;
    let tag = ensemble.tag()?;
    if let Some(expected) = a.algebra {
        if expected != tag {
            return Err(Error::DimensionMismatch { expected: expected.euclidean_dim(), actual: ensemble.n }.into());
        }
    }
    let action = if a.word_length.is_some() { Action::Spin } else { a.action };
    if a.word_length.is_some() && tag != AlgebraTag::Octonion {
        return Err(Error::DimensionMismatch { expected: AlgebraTag::Octonion.euclidean_dim(), actual: ensemble.n }.into());
    }
    let polygons = ensemble.configs()?;
    let moved = act_on(tag, a, action, &polygons)?;

    let mut deviation: f64 = 0.0;
    let mut flipped = 0;
    for (p, q) in polygons.iter().zip(&moved) {
        let (ip, iq) = (quotient_invariant(p), quotient_invariant(q));
        deviation = deviation.max(ip.gram_deviation(&iq)?);
        flipped += usize::from(ip.orientation() != iq.orientation());
    }
    write_output(a.out.as_deref(), &to_json(&Ensemble::new(tag, ensemble.k, ensemble.seed, &moved))?)?;
    summary(
        a.out.as_deref(),
        &format!(
            "{} polygons: max gram deviation {:.3e}, max closure residual {:.3e}, orientation changes {flipped}",
            moved.len(),
            deviation,
            max_closure(&moved)
        ),
    );
    if deviation.is_nan() || deviation > tol || flipped > 0 {
        return Err(CliError::Failed(format!("action left the quotient class: gram deviation {deviation:.3e} (tol {tol:.0e}), {flipped} orientation changes")));
    }
    Ok(())
}

/// CSV rows `bin_start,bin_end,count` over `[0, longest edge]`.
pub fn histogram(polygons: &[PolygonConfig], bins: usize) -> String {
    let lengths: Vec<f64> = polygons.iter().flat_map(|p| p.edges()).map(|e| e.norm()).collect();
    let top = lengths.iter().copied().fold(0.0, f64::max);
    let mut counts = vec![0usize; bins];
    for &l in &lengths {
        let b = if top > 0.0 { ((l / top) * bins as f64) as usize } else { 0 };
        counts[b.min(bins - 1)] += 1;
    }
    let width = top / bins as f64;
    let mut csv = String::from("bin_start,bin_end,count\n");
    for (i, c) in counts.iter().enumerate() {
        writeln!(csv, "{:.16e},{:.16e},{c}", i as f64 * width, (i + 1) as f64 * width).unwrap();
    }
    csv
}

pub fn stats(a: &StatsArgs) -> Result<()> {
    let ensemble: Ensemble = read_json(&a.input)?;
    write_output(a.out.as_deref(), &histogram(&ensemble.configs()?, a.bins as usize))
}
