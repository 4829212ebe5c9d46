use alloc::format;
use alloc::vec::Vec;

use super::{check, rel, PropertyResult, Suite, VerifyConfig};
use crate::algebra::AlgebraTag;
use crate::hopf::{fiber_act, fiber_witness, hopf_phi, hopf_preimage, HopfImage};
use crate::random::{gaussian, gaussian_element, spinor, unit_element};

const TARGET_TRIALS: usize = 10_000;
const FIBER_TRIALS: usize = 1_000;
const ROUND_TRIP_TOL: f64 = 1e-10;
const ISOMETRY_TOL: f64 = 1e-10;

pub(super) fn hopf_suite(config: &VerifyConfig) -> Vec<PropertyResult> {
    let composite = config.tolerances.composite;
    let mut out = Vec::new();
    for tag in AlgebraTag::ALL {
        let s = tag.symbol();
        let n = config.trials_or(TARGET_TRIALS);
        out.extend(check(Suite::Hopf, format!("preimage-round-trip[{s}]"), n, ROUND_TRIP_TOL, config, |rng| {
            let target = HopfImage::new(gaussian(rng), gaussian_element(tag, rng));
            let theta = unit_element(tag, rng);
            let v = hopf_preimage(&target, &theta).expect("tags agree");
            rel(hopf_phi(&v).distance(&target), target.norm())
        }));
        out.extend(check(Suite::Hopf, format!("norm-lemma[{s}]"), n, ROUND_TRIP_TOL, config, |rng| {
            let v = spinor(tag, rng);
            rel(libm::fabs(hopf_phi(&v).norm() - 0.5 * v.norm_sq()), v.norm_sq())
        }));

        let n = config.trials_or(FIBER_TRIALS);
        out.extend(check(Suite::Hopf, format!("fiber-invariance[{s}]"), n, composite, config, |rng| {
            let v = spinor(tag, rng);
            let c = unit_element(tag, rng);
            let w = fiber_act(&v, &c).expect("tags agree");
            rel(hopf_phi(&w).distance(&hopf_phi(&v)), v.norm_sq())
        }));
        out.extend(check(Suite::Hopf, format!("fiber-witness[{s}]"), n, composite, config, |rng| {
            let v = spinor(tag, rng);
            let w = fiber_act(&v, &unit_element(tag, rng)).expect("tags agree");
            match fiber_witness(&v, &w, composite) {
                Ok(Some(c)) => rel(fiber_act(&v, &c).expect("tags agree").distance(&w), v.norm()),
                _ => f64::INFINITY,
            }
        }));
        out.extend(check(Suite::Hopf, format!("witness-rejects-other-fibers[{s}]"), n, 0.0, config, |rng| {
            let (v, w) = (spinor(tag, rng), spinor(tag, rng));
            match fiber_witness(&v, &w, composite) {
                Ok(None) => 0.0,
                _ => 1.0,
            }
        }));
        // |fiber_act(v, c) − fiber_act(v, c′)| = |v||c − c′| in every algebra.
        out.extend(check(Suite::Hopf, format!("fiber-isometry[{s}]"), n, ISOMETRY_TOL, config, |rng| {
            let v = spinor(tag, rng);
            let (c, d) = (unit_element(tag, rng), unit_element(tag, rng));
            let gap = fiber_act(&v, &c).expect("tags agree").distance(&fiber_act(&v, &d).expect("tags agree"));
            let expected = v.norm() * c.value().distance(&d.value());
            rel(libm::fabs(gap - expected), v.norm())
        }));
    }
    out
}
