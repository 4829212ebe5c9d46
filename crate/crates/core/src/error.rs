use core::fmt;

use crate::algebra::AlgebraTag;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Which orthonormality sum of a 2×k frame was violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameSum {
    /// Σ|xᵢ|² = 1
    FirstRow,
    /// Σ|yᵢ|² = 1
    SecondRow,
    /// Σ xᵢ·ȳᵢ = 0
    RowInnerProduct,
}

impl fmt::Display for FrameSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FrameSum::FirstRow => "sum |x_i|^2 = 1",
            FrameSum::SecondRow => "sum |y_i|^2 = 1",
            FrameSum::RowInnerProduct => "sum x_i conj(y_i) = 0",
        })
    }
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("incompatible algebras: {left} and {right}")]
    TagMismatch { left: AlgebraTag, right: AlgebraTag },
    #[error("invalid algebra dimension {0}; expected 1, 2, 4 or 8")]
    InvalidAlgebraDimension(usize),
    #[error("unknown algebra; expected R, C, H or O")]
    UnknownAlgebra,
    #[error("basis index {index} out of range for {tag}")]
    BasisIndex { tag: AlgebraTag, index: usize },
    #[error("expected {expected} coefficients, got {actual}")]
    CoefficientCount { expected: usize, actual: usize },
    #[error("element is not invertible (zero norm)")]
    NotInvertible,
    #[error("{operation} is not defined over {tag}")]
    UnsupportedAlgebra { operation: &'static str, tag: AlgebraTag },
    #[error("element is not a unit: |c|^2 = {norm_sq}")]
    NotUnit { norm_sq: f64 },
    #[error("generator violates r^2 + |u|^2 = 1: got {norm_sq}")]
    GeneratorNotUnit { norm_sq: f64 },
    #[error("matrix is not unitary: residual {residual:e}")]
    NotUnitary { residual: f64 },
    #[error("determinant is not 1: residual {residual:e}")]
    DeterminantNotOne { residual: f64 },
    #[error("matrix is not a rotation: orthogonality residual {orthogonality:e}, det {det}")]
    NotRotation { orthogonality: f64, det: f64 },
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("frame invariant violated ({sum}): residual {residual:e}")]
    FrameViolation { sum: FrameSum, residual: f64 },
    #[error("polygon is not closed: |sum of edges| = {residual:e}")]
    NotClosed { residual: f64 },
    #[error("polygon perimeter is {perimeter}, expected 1")]
    Perimeter { perimeter: f64 },
    #[error("polygon has no nonzero edge")]
    ZeroPolygon,
    #[error("polygons need at least 3 edges, got {0}")]
    TooFewEdges(usize),
    #[error("both spinors are zero; the fiber over 0 has no unit witness")]
    ZeroSpinor,
    #[error("column {column} lies in a different fiber: image distance {residual:e}")]
    FiberMismatch { column: usize, residual: f64 },
    #[error("random draw stayed degenerate after {attempts} attempts")]
    DegenerateSample { attempts: usize },
    #[error("polygon configuration is rank deficient (rank {rank} < {dim})")]
    RankDeficient { rank: usize, dim: usize },
}
