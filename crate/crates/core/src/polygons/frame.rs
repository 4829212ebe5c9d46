use alloc::vec::Vec;

use rand::Rng;

use crate::algebra::{AlgebraElement, AlgebraTag};
use crate::error::{Error, FrameSum, Result};
use crate::hopf::{fiber_act, Spinor, UnitElement};
use crate::random::{gaussian_element, substream};
use crate::spin::{su2_apply, word_apply, GeneratorWord, SpecialUnitary2};
use crate::tolerance::Tolerances;

const MAX_ATTEMPTS: usize = 100;
const DEGENERATE_ROW: f64 = 1e-12;

/// A point of V_𝔽(2, k): two rows `x, y ∈ 𝔽ᵏ` with
/// `Σ|xᵢ|² = Σ|yᵢ|² = 1` and `Σ xᵢȳᵢ = 0`, stored as k spinor columns.
#[derive(Clone, Debug, PartialEq)]
pub struct StiefelFrame {
    tag: AlgebraTag,
    columns: Vec<Spinor>,
}

/// Deviations from the three orthonormality sums, in [`FrameSum`] order.
pub fn frame_residuals(columns: &[Spinor]) -> [f64; 3] {
    let Some(first) = columns.first() else { return [1.0, 1.0, 0.0] };
    let mut xx = 0.0;
    let mut yy = 0.0;
    let mut xy = AlgebraElement::zero(first.tag());
    for c in columns {
        xx += c.x().norm_sq();
        yy += c.y().norm_sq();
        xy += c.x() * c.y().conj();
    }
    [libm::fabs(xx - 1.0), libm::fabs(yy - 1.0), xy.norm()]
}

impl StiefelFrame {
    pub fn new(columns: Vec<Spinor>) -> Result<Self> {
        Self::with_tolerance(columns, Tolerances::DEFAULT.structure)
    }

    /// Like [`StiefelFrame::new`] with a caller-chosen orthonormality tolerance.
    pub fn with_tolerance(columns: Vec<Spinor>, tol: f64) -> Result<Self> {
        if columns.len() < 3 {
            return Err(Error::TooFewEdges(columns.len()));
        }
        let tag = columns[0].tag();
        if let Some(c) = columns.iter().find(|c| c.tag() != tag) {
            return Err(Error::TagMismatch { left: tag, right: c.tag() });
        }
        let sums = [FrameSum::FirstRow, FrameSum::SecondRow, FrameSum::RowInnerProduct];
        for (sum, residual) in sums.into_iter().zip(frame_residuals(&columns)) {
            if residual.is_nan() || residual > tol {
                return Err(Error::FrameViolation { sum, residual });
            }
        }
        Ok(StiefelFrame { tag, columns })
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn k(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Spinor] {
        &self.columns
    }

    pub fn residuals(&self) -> [f64; 3] {
        frame_residuals(&self.columns)
    }

    /// Largest column-wise distance to `other`.
    pub fn distance(&self, other: &StiefelFrame) -> f64 {
        self.columns.iter().zip(&other.columns).map(|(a, b)| a.distance(b)).fold(0.0, f64::max)
    }

    fn map_columns(&self, mut f: impl FnMut(usize, &Spinor) -> Result<Spinor>) -> Result<Self> {
        let columns = self.columns.iter().enumerate().map(|(i, c)| f(i, c)).collect::<Result<Vec<_>>>()?;
        Self::with_tolerance(columns, Tolerances::DEFAULT.composite)
    }
}

/// Frame from two Gaussian rows: normalize `x`, remove `c = Σ yⱼx̄ⱼ` as
/// `yᵢ − c·xᵢ`, normalize `y`. Over 𝕆 this is sound because
/// `(c·xᵢ)·x̄ᵢ = c|xᵢ|²`.
pub fn sample_stiefel_with<R: Rng + ?Sized>(tag: AlgebraTag, k: usize, rng: &mut R) -> Result<StiefelFrame> {
    if k < 3 {
        return Err(Error::TooFewEdges(k));
    }
    for _ in 0..MAX_ATTEMPTS {
        let mut x: Vec<AlgebraElement> = (0..k).map(|_| gaussian_element(tag, rng)).collect();
        let mut y: Vec<AlgebraElement> = (0..k).map(|_| gaussian_element(tag, rng)).collect();
        let nx = libm::sqrt(x.iter().map(AlgebraElement::norm_sq).sum());
        if nx < DEGENERATE_ROW {
            continue;
        }
        x.iter_mut().for_each(|e| *e = e.scale(1.0 / nx));
        let c = x.iter().zip(&y).fold(AlgebraElement::zero(tag), |acc, (xi, yi)| acc + *yi * xi.conj());
        for (yi, xi) in y.iter_mut().zip(&x) {
            *yi = *yi - c * *xi;
        }
        let ny = libm::sqrt(y.iter().map(AlgebraElement::norm_sq).sum());
        if ny < DEGENERATE_ROW {
            continue;
        }
        let columns = x
            .into_iter()
            .zip(y)
            .map(|(xi, yi)| Spinor::new(xi, yi.scale(1.0 / ny)))
            .collect::<Result<Vec<_>>>()?;
        return StiefelFrame::new(columns);
    }
    Err(Error::DegenerateSample { attempts: MAX_ATTEMPTS })
}

pub fn sample_stiefel(tag: AlgebraTag, k: usize, seed: u64) -> Result<StiefelFrame> {
    sample_stiefel_with(tag, k, &mut substream(seed, 0))
}

/// `(xᵢ, yᵢ) ↦ fiber_act((xᵢ, yᵢ), cᵢ)` column by column.
pub fn fiber_act_frame(frame: &StiefelFrame, c: &[UnitElement]) -> Result<StiefelFrame> {
    if c.len() != frame.k() {
        return Err(Error::DimensionMismatch { expected: frame.k(), actual: c.len() });
    }
    frame.map_columns(|i, col| fiber_act(col, &c[i]))
}

pub fn su2_apply_frame(a: &SpecialUnitary2, frame: &StiefelFrame) -> Result<StiefelFrame> {
    frame.map_columns(|_, col| su2_apply(a, col))
}

pub fn word_apply_frame(word: &GeneratorWord, frame: &StiefelFrame) -> Result<StiefelFrame> {
    frame.map_columns(|_, col| word_apply(word, col))
}
