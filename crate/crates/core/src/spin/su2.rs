use rand::Rng;

use super::cartan::reflection_normals;
use super::rotation::Rotation;
use crate::algebra::{AlgebraElement, AlgebraTag};
use crate::error::{Error, Result};
use crate::hopf::{HopfImage, Spinor};
use crate::linalg::Matrix;
use crate::random::{gaussian_element, rng_from_seed};

const UNITARY_TOL: f64 = 1e-10;

/// A 2×2 matrix over one algebra.
pub type Matrix2 = [[AlgebraElement; 2]; 2];

pub fn mat2_mul(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let entry = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

/// Conjugate transpose.
pub fn mat2_adjoint(a: &Matrix2) -> Matrix2 {
    [[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]]
}

pub fn mat2_identity(tag: AlgebraTag) -> Matrix2 {
    let (o, z) = (AlgebraElement::one(tag), AlgebraElement::zero(tag));
    [[o, z], [z, o]]
}

fn mat2_distance(a: &Matrix2, b: &Matrix2) -> f64 {
    let mut s = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            s += (a[i][j] - b[i][j]).norm_sq();
        }
    }
    libm::sqrt(s)
}

fn mat2_tag(a: &Matrix2) -> Result<AlgebraTag> {
    let tag = a[0][0].tag();
    for e in a.iter().flatten() {
        if e.tag() != tag {
            return Err(Error::TagMismatch { left: tag, right: e.tag() });
        }
    }
    Ok(tag)
}

/// An element of SO(2), SU(2) or Sp(2) = SU(2, 𝔽) for 𝔽 = ℝ, ℂ, ℍ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpecialUnitary2 {
    tag: AlgebraTag,
    entries: Matrix2,
}

impl SpecialUnitary2 {
    /// Checks `AA* = I = A*A` and, over ℝ and ℂ, `det A = 1`, all within 1e−10.
    pub fn new(entries: Matrix2) -> Result<Self> {
        let tag = mat2_tag(&entries)?;
        if !tag.is_associative() {
            return Err(Error::UnsupportedAlgebra { operation: "SU(2) matrix", tag });
        }
        let id = mat2_identity(tag);
        let adj = mat2_adjoint(&entries);
        let residual = mat2_distance(&mat2_mul(&entries, &adj), &id)
            .max(mat2_distance(&mat2_mul(&adj, &entries), &id));
        if residual > UNITARY_TOL {
            return Err(Error::NotUnitary { residual });
        }
        if tag != AlgebraTag::Quaternion {
            let det = entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0];
            let residual = det.distance(&AlgebraElement::one(tag));
            if residual > UNITARY_TOL {
                return Err(Error::DeterminantNotOne { residual });
            }
        }
        Ok(SpecialUnitary2 { tag, entries })
    }

    pub fn identity(tag: AlgebraTag) -> Result<Self> {
        Self::new(mat2_identity(tag))
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn entries(&self) -> &Matrix2 {
        &self.entries
    }

    pub fn adjoint(&self) -> Self {
        SpecialUnitary2 { tag: self.tag, entries: mat2_adjoint(&self.entries) }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.tag != other.tag {
            return Err(Error::TagMismatch { left: self.tag, right: other.tag });
        }
        Ok(SpecialUnitary2 { tag: self.tag, entries: mat2_mul(&self.entries, &other.entries) })
    }

    pub fn frobenius_distance(&self, other: &Self) -> f64 {
        mat2_distance(&self.entries, &other.entries)
    }

    /// An element covering `rotation ∈ SO(1 + dim 𝔽)`.
    ///
    /// Each reflection normal `w = (r, ū)` becomes the Hermitian unitary
    /// `((r, ū), (u, −r))`, whose adjoint action is `2wwᵗ − I`; the product
    /// over the even number of normals covers `rotation`.
    pub fn covering(tag: AlgebraTag, rotation: &Rotation) -> Result<Self> {
        if !tag.is_associative() {
            return Err(Error::UnsupportedAlgebra { operation: "SU(2) covering", tag });
        }
        if rotation.dim() != tag.euclidean_dim() {
            return Err(Error::DimensionMismatch {
                expected: tag.euclidean_dim(),
                actual: rotation.dim(),
            });
        }
        let mut acc = mat2_identity(tag);
        for w in reflection_normals(rotation) {
            let r = AlgebraElement::real(tag, w[0]);
            let u_bar = AlgebraElement::new(tag, &w.as_slice()[1..])?;
            acc = mat2_mul(&acc, &[[r, u_bar], [u_bar.conj(), -r]]);
        }
        Self::new(acc)
    }
}

/// `Av`, matrix times column.
pub fn su2_apply(a: &SpecialUnitary2, v: &Spinor) -> Result<Spinor> {
    if a.tag != v.tag() {
        return Err(Error::TagMismatch { left: a.tag, right: v.tag() });
    }
    let m = &a.entries;
    let (x, y) = (v.x(), v.y());
    Spinor::new(m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y)
}

pub fn su2_random(tag: AlgebraTag, seed: u64) -> Result<SpecialUnitary2> {
    su2_random_with(tag, &mut rng_from_seed(seed))
}

/// Orthonormalizes two Gaussian columns; over ℝ and ℂ the second column is
/// then rescaled by a unit so that `det A = 1`.
pub fn su2_random_with<R: Rng + ?Sized>(tag: AlgebraTag, rng: &mut R) -> Result<SpecialUnitary2> {
    if !tag.is_associative() {
        return Err(Error::UnsupportedAlgebra { operation: "SU(2) sampling", tag });
    }
    loop {
        let first = [gaussian_element(tag, rng), gaussian_element(tag, rng)];
        let second = [gaussian_element(tag, rng), gaussian_element(tag, rng)];
        let Some([[a, mut b], [c, mut d]]) = orthonormal_columns(first, second) else { continue };
        if tag != AlgebraTag::Quaternion {
            let det = a * d - b * c;
            let fix = det.conj().scale(1.0 / det.norm());
            b = b * fix;
            d = d * fix;
        }
        return SpecialUnitary2::new([[a, b], [c, d]]);
    }
}

/// Gram–Schmidt with a second projection pass; `None` if a column is
/// nearly zero or nearly parallel to the first.
fn orthonormal_columns(first: [AlgebraElement; 2], second: [AlgebraElement; 2]) -> Option<Matrix2> {
    let [mut a, mut c] = first;
    let [mut b, mut d] = second;
    let n1 = libm::sqrt(a.norm_sq() + c.norm_sq());
    if n1 < 1e-8 {
        return None;
    }
    a = a.scale(1.0 / n1);
    c = c.scale(1.0 / n1);
    for _ in 0..2 {
        let s = a.conj() * b + c.conj() * d;
        b = b - a * s;
        d = d - c * s;
    }
    let n2 = libm::sqrt(b.norm_sq() + d.norm_sq());
    if n2 < 1e-8 {
        return None;
    }
    Some([[a, b.scale(1.0 / n2)], [c, d.scale(1.0 / n2)]])
}

/// The matrix of `X ↦ π(A π⁻¹(X) A*)` on ℝ⊕𝔽, column `m` being the image of
/// the `m`-th basis vector of the traceless Hermitian matrices.
pub fn adjoint_rotation(a: &SpecialUnitary2) -> Result<Rotation> {
    let tag = a.tag;
    let n = tag.euclidean_dim();
    let adj = mat2_adjoint(&a.entries);
    let mut m = Matrix::zeros(n);
    for col in 0..n {
        let basis = if col == 0 {
            HopfImage::new(1.0, AlgebraElement::zero(tag))
        } else {
            HopfImage::new(0.0, AlgebraElement::basis(tag, col - 1)?)
        };
        let image = mat2_mul(&mat2_mul(&a.entries, &basis.to_matrix()), &adj);
        let v = HopfImage::from_matrix(&image).to_vector();
        for row in 0..n {
            m.set(row, col, v[row]);
        }
    }
    Rotation::new(m)
}
