//! Acceptance criteria, one line per criterion. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use polyhopf::algebra::{octonion_relations, CAYLEY_DICKSON_RELABEL, OCTONION_TABLE};
use polyhopf::verify::{run_suite, Report, Suite, VerifyConfig};
use polyhopf::{AlgebraElement, AlgebraTag, StructureTable};

const SEED: u64 = 20_240_601;

struct Outcome {
    passed: bool,
    detail: String,
}

fn suite_outcome(report: &Report, expected: usize) -> Outcome {
    let worst = report
        .results
        .iter()
        .map(|r| (r.max_residual / r.tolerance.max(f64::MIN_POSITIVE), r))
        .max_by(|a, b| a.0.total_cmp(&b.0));
    let mut detail = format!("{} properties", report.results.len());
    if let Some((_, r)) = worst {
        detail += &format!(", tightest {} = {:.2e} (tol {:.0e}, {} trials)", r.name, r.max_residual, r.tolerance, r.trials);
    }
    for f in report.failures() {
        detail += &format!("; FAILED {} residual {:.3e}", f.name, f.max_residual);
    }
    Outcome { passed: report.passed() && report.results.len() == expected, detail }
}

fn properties(suite: Suite, prefixes: &[&str], expected: usize) -> Outcome {
    suite_outcome(&run_suite(suite, &VerifyConfig::new(SEED).with_only(prefixes)), expected)
}

fn octonion_table() -> Outcome {
    let e = |i| AlgebraElement::basis(AlgebraTag::Octonion, i).unwrap();
    let mut bad = 0;
    for (a, b, c) in octonion_relations() {
        let expected = e(c.index as usize).scale(c.sign());
        if e(a) * e(b) != expected || OCTONION_TABLE.entry(a, b) != c {
            bad += 1;
        }
    }
    let cd = StructureTable::cayley_dickson(3).relabeled(&CAYLEY_DICKSON_RELABEL);
    let differing = (0..8).flat_map(|i| (0..8).map(move |j| (i, j))).filter(|&(i, j)| OCTONION_TABLE.entry(i, j) != cd.entry(i, j)).count();
    Outcome {
        passed: bad == 0 && differing == 0,
        detail: format!("49 relations, {bad} violated; {differing} of 64 entries differ from Cayley-Dickson"),
    }
}

fn non_associativity() -> Outcome {
    let e = |i| AlgebraElement::basis(AlgebraTag::Octonion, i).unwrap();
    let left = (e(1) * e(2)) * (e(2) * e(3));
    let right = e(1) * ((e(2) * e(2)) * e(3));
    Outcome {
        passed: left == e(7) && right == -e(7),
        detail: format!("(e1e2)(e2e3) = {:?}, e1(e2^2 e3) = {:?}", left.coeffs(), right.coeffs()),
    }
}

type Criterion = (&'static str, Duration, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("1 octonion table exact", Duration::from_millis(100), Box::new(octonion_table)),
        ("2 non-associativity witness", Duration::from_millis(100), Box::new(non_associativity)),
        (
            "3 Moufang, alternative, rank, conjugation",
            Duration::from_secs(2),
            Box::new(|| properties(Suite::Algebra, &["moufang", "alternative", "rank-equation", "conjugation-left", "conjugation-right", "conjugation-polarized"], 10)),
        ),
        (
            "4 Hopf norm lemma and preimage round trip",
            Duration::from_secs(2),
            Box::new(|| properties(Suite::Hopf, &["norm-lemma", "preimage-round-trip"], 8)),
        ),
        (
            "5 octonion fiber lemma, both directions",
            Duration::from_secs(1),
            Box::new(|| properties(Suite::Hopf, &["fiber-invariance[O]", "fiber-witness[O]", "witness-rejects-other-fibers[O]"], 3)),
        ),
        ("6 key identity lemma", Duration::from_secs(1), Box::new(|| properties(Suite::Spin, &["key-identity"], 2))),
        (
            "7 induced rotations and kernel",
            Duration::from_secs(2),
            Box::new(|| properties(Suite::Spin, &["generator-rotation-structure", "generator-equivariance", "kernel-word"], 3)),
        ),
        (
            "8 SU(2,F) equivariance and trace invariance",
            Duration::from_secs(3),
            Box::new(|| properties(Suite::Spin, &["su2-equivariance", "adjoint-rotation", "trace-invariance"], 7)),
        ),
        (
            "9 polygon pipeline",
            Duration::from_secs(5),
            Box::new(|| properties(Suite::Polygon, &["frame-invariants", "closure-and-perimeter", "lift-round-trip"], 60)),
        ),
        (
            "10 quotient invariance under group and fiber actions",
            Duration::from_secs(5),
            Box::new(|| properties(Suite::Polygon, &["quotient-invariance"], 4)),
        ),
        ("11 Cartan-Dieudonne reconstruction", Duration::from_secs(2), Box::new(|| properties(Suite::Spin, &["cartan-dieudonne"], 1))),
    ];

    let total = Instant::now();
    let mut all = true;
    for (name, bound, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let ok = outcome.passed && elapsed < *bound;
        all &= ok;
        println!(
            "criterion {name}: {} [{:.3} s, bound {:.1} s] {}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            bound.as_secs_f64(),
            outcome.detail
        );
    }
    let elapsed = total.elapsed();
    let ok = elapsed < Duration::from_secs(30);
    all &= ok;
    println!("full suite: {} [{:.3} s, bound 30 s]", if ok { "PASS" } else { "FAIL" }, elapsed.as_secs_f64());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
