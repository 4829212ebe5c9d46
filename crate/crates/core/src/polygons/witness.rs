//! Reconstructs the group element and fiber parameters relating two frames
//! whose polygons are SO(n)-equivalent.

use alloc::boxed::Box;
use alloc::vec::Vec;

use super::config::PolygonConfig;
use super::frame::{su2_apply_frame, word_apply_frame, StiefelFrame};
use super::lift::phi_k;
use crate::error::{Error, Result};
use crate::hopf::{fiber_act, fiber_witness, hopf_phi, UnitElement};
use crate::linalg::{nearest_rotation, Matrix};
use crate::spin::{word_from_rotation, GeneratorWord, Rotation, SpecialUnitary2};

/// The spin-side half of a witness.
#[derive(Clone, Debug, PartialEq)]
pub enum GroupWitness {
    Unitary(Box<SpecialUnitary2>),
    Word(GeneratorWord),
}

#[derive(Clone, Debug, PartialEq)]
pub struct WitnessChain {
    pub rotation: Rotation,
    pub group: GroupWitness,
    /// Per-column fiber parameter; `None` on zero columns.
    pub fibers: Vec<Option<UnitElement>>,
    /// Largest of the rotation fit residual `|R pᵢ − qᵢ|` and the final
    /// column distance `|fiber_act(g·xᵢ, cᵢ) − yᵢ|`.
    pub residual: f64,
}

/// The rotation minimising `Σ |R pᵢ − qᵢ|²` over edges pᵢ, qᵢ (the polar
/// factor of `Q Pᵗ`); needs P to have full rank n.
pub fn aligning_rotation(p: &PolygonConfig, q: &PolygonConfig) -> Result<Rotation> {
    let n = p.n();
    if q.n() != n || q.k() != p.k() {
        return Err(Error::DimensionMismatch { expected: n, actual: q.n() });
    }
    let rank = super::quotient::independent_edges(p.edges()).len();
    if rank != n {
        return Err(Error::RankDeficient { rank, dim: n });
    }
    let mut qp = Matrix::zeros(n);
    for (a, b) in p.edges().iter().zip(q.edges()) {
        for i in 0..n {
            for j in 0..n {
                qp.set(i, j, qp.get(i, j) + b[i] * a[j]);
            }
        }
    }
    Rotation::new(nearest_rotation(&qp))
}

/// Finds g and c with `fiber_act(g·xᵢ, cᵢ) = yᵢ` for every column, where g
/// is an SU(2, 𝔽) element over ℝ, ℂ, ℍ and a generator word over 𝕆.
pub fn witness_chain(x: &StiefelFrame, y: &StiefelFrame, tol: f64) -> Result<WitnessChain> {
    if x.tag() != y.tag() {
        return Err(Error::TagMismatch { left: x.tag(), right: y.tag() });
    }
    let (p, q) = (phi_k(x)?, phi_k(y)?);
    let rotation = aligning_rotation(&p, &q)?;
    let fit = p.edges().iter().zip(q.edges()).map(|(a, b)| rotation.apply(a).distance(b)).fold(0.0, f64::max);
    let (group, moved) = if x.tag().is_associative() {
        let a = SpecialUnitary2::covering(x.tag(), &rotation)?;
        let moved = su2_apply_frame(&a, x)?;
        (GroupWitness::Unitary(Box::new(a)), moved)
    } else {
        let w = word_from_rotation(&rotation)?;
        let moved = word_apply_frame(&w, x)?;
        (GroupWitness::Word(w), moved)
    };
    let mut residual = fit;
    let mut fibers = Vec::with_capacity(x.k());
    for (column, (m, target)) in moved.columns().iter().zip(y.columns()).enumerate() {
        match fiber_witness(m, target, tol) {
            Err(Error::ZeroSpinor) => fibers.push(None),
            Err(e) => return Err(e),
            Ok(None) => {
                let residual = hopf_phi(m).distance(&hopf_phi(target));
                return Err(Error::FiberMismatch { column, residual });
            }
            Ok(Some(c)) => {
                residual = residual.max(fiber_act(m, &c)?.distance(target));
                fibers.push(Some(c));
            }
        }
    }
    Ok(WitnessChain { rotation, group, fibers, residual })
}
