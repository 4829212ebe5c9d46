use core::ops::Mul;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{orthonormalize_columns, Matrix, Vector};
use crate::random::gaussian;

const ROTATION_TOL: f64 = 1e-10;

/// An element of SO(n), n ∈ {2, 3, 5, 9}.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rotation {
    matrix: Matrix,
}

impl Rotation {
    /// Accepts `matrix` if `M·Mᵗ = I` and `det M = 1`, both within 1e−10.
    pub fn new(matrix: Matrix) -> Result<Self> {
        let orthogonality = matrix.orthogonality_residual();
        let det = matrix.det();
        if orthogonality > ROTATION_TOL || libm::fabs(det - 1.0) > ROTATION_TOL {
            return Err(Error::NotRotation { orthogonality, det });
        }
        Ok(Rotation { matrix })
    }

    pub fn identity(n: usize) -> Self {
        Rotation { matrix: Matrix::identity(n) }
    }

    /// Haar-distributed rotation: Gram–Schmidt on a Gaussian matrix, with
    /// the first column negated when the determinant comes out negative.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        loop {
            let mut g = Matrix::zeros(n);
            for i in 0..n {
                for j in 0..n {
                    g.set(i, j, gaussian(rng));
                }
            }
            let Some(mut q) = orthonormalize_columns(&g, 1e-8) else { continue };
            if q.det() < 0.0 {
                for i in 0..n {
                    q.set(i, 0, -q.get(i, 0));
                }
            }
            return Rotation { matrix: q };
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.matrix.apply(v)
    }

    pub fn inverse(&self) -> Rotation {
        Rotation { matrix: self.matrix.transpose() }
    }

    pub fn frobenius_distance(&self, other: &Rotation) -> f64 {
        self.matrix.frobenius_distance(&other.matrix)
    }

    pub(crate) fn from_matrix_unchecked(matrix: Matrix) -> Self {
        Rotation { matrix }
    }
}

impl Mul for Rotation {
    type Output = Rotation;
    fn mul(self, rhs: Rotation) -> Rotation {
        Rotation { matrix: self.matrix * rhs.matrix }
    }
}
