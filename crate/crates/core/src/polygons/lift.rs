use alloc::vec::Vec;

use super::config::PolygonConfig;
use super::frame::{sample_stiefel_with, StiefelFrame};
use crate::algebra::AlgebraTag;
use crate::error::{Error, Result};
use crate::hopf::{hopf_phi, hopf_preimage, HopfImage, UnitElement};
use crate::random::substream;
use crate::tolerance::Tolerances;

/// Φᵏ: edge i is `π∘Φ(xᵢ, yᵢ) ∈ ℝ^{1+d}`.
pub fn phi_k(frame: &StiefelFrame) -> Result<PolygonConfig> {
    let frame = StiefelFrame::with_tolerance(frame.columns().to_vec(), Tolerances::DEFAULT.composite)?;
    let edges = frame.columns().iter().map(|c| hopf_phi(c).to_vector()).collect();
    PolygonConfig::with_tolerance(edges, Tolerances::DEFAULT.composite)
}

/// A frame over `p` with column i the preimage of edge i at fiber
/// parameter `thetas[i]`; `None` picks every θᵢ = 1.
pub fn lift(p: &PolygonConfig, thetas: Option<&[UnitElement]>) -> Result<StiefelFrame> {
    let tag = AlgebraTag::from_euclidean_dim(p.n())?;
    if let Some(t) = thetas {
        if t.len() != p.k() {
            return Err(Error::DimensionMismatch { expected: p.k(), actual: t.len() });
        }
    }
    let one = UnitElement::one(tag);
    let columns = p
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let theta = thetas.map_or(&one, |t| &t[i]);
            hopf_preimage(&HopfImage::from_vector(tag, e)?, theta)
        })
        .collect::<Result<Vec<_>>>()?;
    StiefelFrame::with_tolerance(columns, Tolerances::DEFAULT.composite)
}

/// Sample `index` of the ensemble `(tag, k, seed)`; depends only on
/// `(seed, index)`.
pub fn sample_frame(tag: AlgebraTag, k: usize, seed: u64, index: u64) -> Result<StiefelFrame> {
    sample_stiefel_with(tag, k, &mut substream(seed, index))
}

pub fn sample_polygon(tag: AlgebraTag, k: usize, seed: u64, index: u64) -> Result<PolygonConfig> {
    phi_k(&sample_frame(tag, k, seed, index)?)
}
