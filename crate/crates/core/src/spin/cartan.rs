//! Constructive Cartan–Dieudonné: every R ∈ SO(n) is a product of an even
//! number (at most n) of hyperplane reflections `I − 2wwᵗ`.

use alloc::vec::Vec;

use super::generator::{GeneratorWord, SpinGenerator};
use super::rotation::Rotation;
use crate::algebra::AlgebraTag;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};

const FIXED_COLUMN_TOL: f64 = 1e-12;

/// Unit normals `w₁, …, w_m` with `R = H(w₁)·H(w₂)⋯H(w_m)` and
/// `H(w) = I − 2wwᵗ`. Columns are fixed left to right by Householder steps;
/// `m` is even because `det R = 1`.
pub fn reflection_normals(rotation: &Rotation) -> Vec<Vector> {
    let n = rotation.dim();
    let mut residual = *rotation.matrix();
    let mut normals = Vec::with_capacity(n);
    for i in 0..n.saturating_sub(1) {
        // Supported on rows i.. so the columns already fixed stay exactly fixed.
        let a = residual.column(i);
        let mut diff = Vector::zeros(n);
        for j in i + 1..n {
            diff[j] = a[j];
        }
        diff[i] = if a[i] > 0.0 { -diff.norm_sq() / (1.0 + a[i]) } else { a[i] - 1.0 };
        let len = diff.norm();
        if len <= FIXED_COLUMN_TOL {
            continue;
        }
        let w = diff.scale(1.0 / len);
        residual = -Matrix::reflection_complement(&w) * residual;
        normals.push(w);
    }
    // With the first n − 1 columns fixed the last one is ±eₙ up to rounding.
    if n > 0 && residual.get(n - 1, n - 1) < 0.0 {
        normals.push(Vector::basis(n, n - 1));
    }
    debug_assert!(normals.len().is_multiple_of(2), "odd reflection count for a rotation");
    normals
}

/// A generator word whose induced rotation is `rotation` (n = 9).
///
/// Each normal `w = (r, ū)` gives the generator `g(r, u)` with induced map
/// `2wwᵗ − I = −H(w)`. The count is even, so the signs cancel in the product.
pub fn word_from_rotation(rotation: &Rotation) -> Result<GeneratorWord> {
    let n = AlgebraTag::Octonion.euclidean_dim();
    if rotation.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, actual: rotation.dim() });
    }
    let factors = reflection_normals(rotation)
        .iter()
        .map(SpinGenerator::from_normal)
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratorWord::new(factors))
}
