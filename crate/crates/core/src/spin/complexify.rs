//! The embedding h of 2×2 quaternion matrices into 4×4 complex matrices.

use super::su2::Matrix2;
use crate::algebra::{AlgebraElement, AlgebraTag};
use crate::error::{Error, Result};

const C: AlgebraTag = AlgebraTag::Complex;

pub type ComplexMatrix4 = [[AlgebraElement; 4]; 4];

/// Splits `q = z₁ + z₂ j` with `z₁, z₂ ∈ ℂ`.
pub fn split_quaternion(q: &AlgebraElement) -> Result<(AlgebraElement, AlgebraElement)> {
    if q.tag() != AlgebraTag::Quaternion {
        return Err(Error::TagMismatch { left: q.tag(), right: AlgebraTag::Quaternion });
    }
    let c = q.coeffs();
    Ok((AlgebraElement::new(C, &c[0..2])?, AlgebraElement::new(C, &c[2..4])?))
}

/// `h(A₁ + A₂ j) = ((A₁, A₂), (−Ā₂, Ā₁))`.
pub fn quaternion_complexify(a: &Matrix2) -> Result<ComplexMatrix4> {
    let mut out = [[AlgebraElement::zero(C); 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            let (z1, z2) = split_quaternion(&a[i][j])?;
            out[i][j] = z1;
            out[i][j + 2] = z2;
            out[i + 2][j] = -z2.conj();
            out[i + 2][j + 2] = z1.conj();
        }
    }
    Ok(out)
}

pub fn mat4_mul(a: &ComplexMatrix4, b: &ComplexMatrix4) -> ComplexMatrix4 {
    let mut out = [[AlgebraElement::zero(C); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn mat4_adjoint(a: &ComplexMatrix4) -> ComplexMatrix4 {
    let mut out = [[AlgebraElement::zero(C); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[j][i].conj();
        }
    }
    out
}

pub fn mat4_trace(a: &ComplexMatrix4) -> AlgebraElement {
    (0..4).fold(AlgebraElement::zero(C), |acc, i| acc + a[i][i])
}

pub fn mat4_distance(a: &ComplexMatrix4, b: &ComplexMatrix4) -> f64 {
    let mut s = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            s += (a[i][j] - b[i][j]).norm_sq();
        }
    }
    libm::sqrt(s)
}
