use alloc::format;
use alloc::vec::Vec;

use rand::Rng;

use super::{check, PropertyResult, Suite, VerifyConfig};
use crate::algebra::AlgebraTag;
use crate::error::Result;
use crate::hopf::{Spinor, UnitElement};
use crate::polygons::{
    fiber_act_frame, lift, phi_k, quotient_invariant, rotate_polygon, sample_stiefel_with,
    su2_apply_frame, witness_chain, word_apply_frame, StiefelFrame,
};
use crate::random::{unit_element, SeededRng};
use crate::spin::{su2_random_with, word_rotation, GeneratorWord};

const SIZES: [usize; 5] = [3, 4, 8, 16, 64];
const SAMPLE_TRIALS: usize = 100;
const ACTION_TRIALS: usize = 200;
const WITNESS_TRIALS: usize = 50;
const MAX_WORD: usize = 6;
const WITNESS_TOL: f64 = 1e-7;

fn fibers(tag: AlgebraTag, k: usize, rng: &mut SeededRng) -> Vec<UnitElement> {
    (0..k).map(|_| unit_element(tag, rng)).collect()
}

/// `g·(X·c)` for a random group element g and fiber tuple c.
fn random_action(x: &StiefelFrame, rng: &mut SeededRng) -> Result<(StiefelFrame, Option<GeneratorWord>)> {
    let tag = x.tag();
    let xc = fiber_act_frame(x, &fibers(tag, x.k(), rng))?;
    if tag.is_associative() {
        Ok((su2_apply_frame(&su2_random_with(tag, rng)?, &xc)?, None))
    } else {
        let w = GeneratorWord::random(rng.random_range(0..=MAX_WORD), rng);
        Ok((word_apply_frame(&w, &xc)?, Some(w)))
    }
}

fn frame_defect(f: &StiefelFrame) -> f64 {
    f.residuals().into_iter().fold(0.0, f64::max)
}

pub(super) fn polygon_suite(config: &VerifyConfig) -> Vec<PropertyResult> {
    let structure = config.tolerances.structure;
    let composite = config.tolerances.composite;
    let mut out = Vec::new();
    for tag in AlgebraTag::ALL {
        let s = tag.symbol();
        for k in SIZES {
            let n = config.trials_or(SAMPLE_TRIALS);
            out.extend(check(Suite::Polygon, format!("frame-invariants[{s},k={k}]"), n, structure, config, |rng| {
                sample_stiefel_with(tag, k, rng).map_or(f64::INFINITY, |f| frame_defect(&f))
            }));
            out.extend(check(Suite::Polygon, format!("closure-and-perimeter[{s},k={k}]"), n, structure, config, |rng| {
                let Ok(p) = sample_stiefel_with(tag, k, rng).and_then(|f| phi_k(&f)) else { return f64::INFINITY };
                p.closure_residual().max(libm::fabs(p.perimeter() - 1.0))
            }));
            out.extend(check(Suite::Polygon, format!("lift-round-trip[{s},k={k}]"), n, composite, config, |rng| {
                let Ok(p) = sample_stiefel_with(tag, k, rng).and_then(|f| phi_k(&f)) else { return f64::INFINITY };
                let thetas = fibers(tag, k, rng);
                lift(&p, Some(&thetas)).and_then(|f| phi_k(&f)).map_or(f64::INFINITY, |q| p.distance(&q))
            }));
        }

        let n = config.trials_or(ACTION_TRIALS);
        out.extend(check(Suite::Polygon, format!("quotient-invariance[{s}]"), n, composite, config, |rng| {
            let k = rng.random_range(3..=16);
            let Ok(x) = sample_stiefel_with(tag, k, rng) else { return f64::INFINITY };
            let Ok((y, _)) = random_action(&x, rng) else { return f64::INFINITY };
            let (Ok(p), Ok(q)) = (phi_k(&x), phi_k(&y)) else { return f64::INFINITY };
            let (a, b) = (quotient_invariant(&p), quotient_invariant(&q));
            if a.orientation() != b.orientation() {
                return f64::INFINITY;
            }
            a.gram_deviation(&b).unwrap_or(f64::INFINITY)
        }));
        out.extend(check(Suite::Polygon, format!("action-frame-invariants[{s}]"), n, composite, config, |rng| {
            let k = rng.random_range(3..=16);
            sample_stiefel_with(tag, k, rng)
                .and_then(|x| random_action(&x, rng))
                .map_or(f64::INFINITY, |(y, _)| frame_defect(&y))
        }));
        out.extend(check(Suite::Polygon, format!("degenerate-fiber-count[{s}]"), n, 0.0, config, |rng| {
            let l = rng.random_range(3..=8);
            let zeros = rng.random_range(1..=4);
            let Ok(x) = sample_stiefel_with(tag, l, rng) else { return f64::INFINITY };
            let mut columns = x.columns().to_vec();
            columns.extend(core::iter::repeat_n(Spinor::zero(tag), zeros));
            let Ok(padded) = StiefelFrame::new(columns) else { return f64::INFINITY };
            let Ok(p) = phi_k(&padded) else { return f64::INFINITY };
            let Ok(lifted) = lift(&p, Some(&fibers(tag, l + zeros, rng))) else { return f64::INFINITY };
            let zero_columns = lifted.columns().iter().filter(|c| c.is_zero()).count();
            (p.fiber_dimension().abs_diff(l) + zero_columns.abs_diff(zeros)) as f64
        }));
        if tag == AlgebraTag::Octonion {
            out.extend(check(Suite::Polygon, "octonion-rotation-equivariance".into(), n, composite, config, |rng| {
                let k = rng.random_range(3..=16);
                let Ok(x) = sample_stiefel_with(tag, k, rng) else { return f64::INFINITY };
                let w = GeneratorWord::random(rng.random_range(0..=MAX_WORD), rng);
                let lhs = phi_k(&x).and_then(|p| rotate_polygon(&word_rotation(&w), &p));
                let rhs = word_apply_frame(&w, &x).and_then(|y| phi_k(&y));
                match (lhs, rhs) {
                    (Ok(a), Ok(b)) => a.distance(&b),
                    _ => f64::INFINITY,
                }
            }));
        }

        let n = config.trials_or(WITNESS_TRIALS);
        out.extend(check(Suite::Polygon, format!("witness-chain[{s}]"), n, WITNESS_TOL, config, |rng| {
            let k = tag.euclidean_dim() + rng.random_range(1..=8);
            let Ok(x) = sample_stiefel_with(tag, k, rng) else { return f64::INFINITY };
            let Ok((y, _)) = random_action(&x, rng) else { return f64::INFINITY };
            witness_chain(&x, &y, composite).map_or(f64::INFINITY, |c| c.residual)
        }));
    }
    out
}
