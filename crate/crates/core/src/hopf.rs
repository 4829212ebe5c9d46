//! The modified Hopf map Φ: 𝔽² → ℋ₂⁰(𝔽) ≅ ℝ⊕𝔽 and its fibers.
//!
//! `Φ(x, y) = ((|x|² − |y|²)/2, x·ȳ)`, read as the traceless Hermitian matrix
//! `((λ, α), (ᾱ, −λ))`. The fiber over a nonzero point is a copy of 𝔽(1),
//! swept out by the right action `(x, y)·c = (xc, yc)` for ℝ, ℂ, ℍ and by
//! `(x, y)·c = ((x y⁻¹)(y c), y c)` for 𝕆, where plain right multiplication
//! no longer preserves `x·ȳ`.

use crate::algebra::{AlgebraElement, AlgebraTag};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::tolerance::Tolerances;

/// A column `(x, y)ᵗ ∈ 𝔽²`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spinor {
    x: AlgebraElement,
    y: AlgebraElement,
}

impl Spinor {
    pub fn new(x: AlgebraElement, y: AlgebraElement) -> Result<Self> {
        if x.tag() != y.tag() {
            return Err(Error::TagMismatch { left: x.tag(), right: y.tag() });
        }
        Ok(Spinor { x, y })
    }

    pub fn zero(tag: AlgebraTag) -> Self {
        Spinor { x: AlgebraElement::zero(tag), y: AlgebraElement::zero(tag) }
    }

    pub fn x(&self) -> AlgebraElement {
        self.x
    }

    pub fn y(&self) -> AlgebraElement {
        self.y
    }

    pub fn tag(&self) -> AlgebraTag {
        self.x.tag()
    }

    /// `|v|² = |x|² + |y|²`.
    pub fn norm_sq(&self) -> f64 {
        self.x.norm_sq() + self.y.norm_sq()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sq())
    }

    pub fn scale(&self, s: f64) -> Self {
        Spinor { x: self.x.scale(s), y: self.y.scale(s) }
    }

    pub fn distance(&self, other: &Spinor) -> f64 {
        libm::sqrt(
            (self.x - other.x).norm_sq() + (self.y - other.y).norm_sq(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

/// A point `(λ, α) ∈ ℝ⊕𝔽`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HopfImage {
    pub lambda: f64,
    pub alpha: AlgebraElement,
}

impl HopfImage {
    pub fn new(lambda: f64, alpha: AlgebraElement) -> Self {
        HopfImage { lambda, alpha }
    }

    pub fn zero(tag: AlgebraTag) -> Self {
        HopfImage { lambda: 0.0, alpha: AlgebraElement::zero(tag) }
    }

    pub fn tag(&self) -> AlgebraTag {
        self.alpha.tag()
    }

    /// `√(λ² + |α|²)`.
    pub fn norm(&self) -> f64 {
        libm::sqrt(self.lambda * self.lambda + self.alpha.norm_sq())
    }

    /// `(λ, α₀, …, α_{d−1}) ∈ ℝ^{1+d}`.
    pub fn to_vector(&self) -> Vector {
        let tag = self.tag();
        let mut v = Vector::zeros(tag.euclidean_dim());
        v[0] = self.lambda;
        v.as_mut_slice()[1..].copy_from_slice(self.alpha.coeffs());
        v
    }

    pub fn from_vector(tag: AlgebraTag, v: &Vector) -> Result<Self> {
        if v.dim() != tag.euclidean_dim() {
            return Err(Error::DimensionMismatch { expected: tag.euclidean_dim(), actual: v.dim() });
        }
        Ok(HopfImage { lambda: v[0], alpha: AlgebraElement::new(tag, &v.as_slice()[1..])? })
    }

    /// The traceless Hermitian matrix `((λ, α), (ᾱ, −λ))`.
    pub fn to_matrix(&self) -> [[AlgebraElement; 2]; 2] {
        let tag = self.tag();
        [
            [AlgebraElement::real(tag, self.lambda), self.alpha],
            [self.alpha.conj(), AlgebraElement::real(tag, -self.lambda)],
        ]
    }

    /// π: reads `(λ, α)` off the first row. The matrix is assumed traceless
    /// Hermitian; use [`hermitian_residual`] to check.
    pub fn from_matrix(m: &[[AlgebraElement; 2]; 2]) -> Self {
        HopfImage { lambda: m[0][0].real_part(), alpha: m[0][1] }
    }

    pub fn distance(&self, other: &HopfImage) -> f64 {
        let dl = self.lambda - other.lambda;
        libm::sqrt(dl * dl + (self.alpha - other.alpha).norm_sq())
    }
}

/// Deviation of `m` from the traceless Hermitian form `((λ, α), (ᾱ, −λ))`.
pub fn hermitian_residual(m: &[[AlgebraElement; 2]; 2]) -> f64 {
    let lambda = m[0][0].real_part();
    let tag = m[0][0].tag();
    let a = m[0][0].distance(&AlgebraElement::real(tag, lambda));
    let b = m[1][1].distance(&AlgebraElement::real(tag, -lambda));
    let c = m[1][0].distance(&m[0][1].conj());
    a.max(b).max(c)
}

/// A point of the unit sphere 𝔽(1); for 𝕆 this is the Moufang loop 𝕆(1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitElement(AlgebraElement);

impl UnitElement {
    pub fn new(value: AlgebraElement) -> Result<Self> {
        let norm_sq = value.norm_sq();
        if libm::fabs(norm_sq - 1.0) > Tolerances::DEFAULT.single {
            return Err(Error::NotUnit { norm_sq });
        }
        Ok(UnitElement(value))
    }

    /// Rescales a nonzero element onto the unit sphere.
    pub fn normalize(value: AlgebraElement) -> Result<Self> {
        let n = value.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::NotUnit { norm_sq: n * n });
        }
        Ok(UnitElement(value.scale(1.0 / n)))
    }

    pub fn one(tag: AlgebraTag) -> Self {
        UnitElement(AlgebraElement::one(tag))
    }

    pub fn value(&self) -> AlgebraElement {
        self.0
    }

    pub fn tag(&self) -> AlgebraTag {
        self.0.tag()
    }
}

fn check_tags(a: AlgebraTag, b: AlgebraTag) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::TagMismatch { left: a, right: b })
    }
}

/// `Φ(x, y) = ((|x|² − |y|²)/2, x·ȳ)`.
pub fn hopf_phi(v: &Spinor) -> HopfImage {
    HopfImage { lambda: 0.5 * (v.x.norm_sq() - v.y.norm_sq()), alpha: v.x * v.y.conj() }
}

/// A spinor over `target`, parametrised by `theta`.
///
/// For `α ≠ 0` the solution is `(|x|·(α/|α|)·θ, |y|·θ)` with
/// `|x|² = λ + ρ`, `|y|² = −λ + ρ`, `ρ = √(λ² + |α|²)`. The smaller of the
/// two squared radii is recovered as `|α|²` over the larger one to avoid
/// cancellation. For `α = 0` the spinor is `(√(2λ)·θ, 0)` when `λ > 0`,
/// `(0, √(−2λ)·θ)` when `λ < 0` and zero at the origin.
pub fn hopf_preimage(target: &HopfImage, theta: &UnitElement) -> Result<Spinor> {
    let tag = target.tag();
    check_tags(tag, theta.tag())?;
    let theta = theta.value();
    let lambda = target.lambda;
    let alpha_sq = target.alpha.norm_sq();
    let rho = target.norm();
    if rho == 0.0 {
        return Ok(Spinor::zero(tag));
    }
    let alpha_norm = libm::sqrt(alpha_sq);
    if alpha_norm <= Tolerances::DEFAULT.zero * rho {
        let zero = AlgebraElement::zero(tag);
        return Ok(if lambda > 0.0 {
            Spinor { x: theta.scale(libm::sqrt(2.0 * lambda)), y: zero }
        } else {
            Spinor { x: zero, y: theta.scale(libm::sqrt(-2.0 * lambda)) }
        });
    }
    let (x_sq, y_sq) = if lambda >= 0.0 {
        let x_sq = lambda + rho;
        (x_sq, alpha_sq / x_sq)
    } else {
        let y_sq = rho - lambda;
        (alpha_sq / y_sq, y_sq)
    };
    let direction = target.alpha.scale(1.0 / alpha_norm);
    Ok(Spinor { x: (direction * theta).scale(libm::sqrt(x_sq)), y: theta.scale(libm::sqrt(y_sq)) })
}

fn y_is_zero(v: &Spinor) -> bool {
    v.y.norm() <= Tolerances::DEFAULT.zero * v.norm()
}

/// The unit-element action preserving the fibers of Φ.
pub fn fiber_act(v: &Spinor, c: &UnitElement) -> Result<Spinor> {
    check_tags(v.tag(), c.tag())?;
    let c = c.value();
    if v.tag().is_associative() || y_is_zero(v) {
        return Ok(Spinor { x: v.x * c, y: v.y * c });
    }
    let y_inv = v.y.inverse()?;
    let yc = v.y * c;
    Ok(Spinor { x: (v.x * y_inv) * yc, y: yc })
}

/// Finds `c` with `fiber_act(v, c) = w` when `Φ(v) = Φ(w)` within `tol`
/// (relative to `|Φ(v)|`); returns `None` when the images differ.
pub fn fiber_witness(v: &Spinor, w: &Spinor, tol: f64) -> Result<Option<UnitElement>> {
    check_tags(v.tag(), w.tag())?;
    if v.is_zero() && w.is_zero() {
        return Err(Error::ZeroSpinor);
    }
    let (pv, pw) = (hopf_phi(v), hopf_phi(w));
    let scale = pv.norm().max(pw.norm());
    if pv.distance(&pw) > tol * scale || v.is_zero() || w.is_zero() {
        return Ok(None);
    }
    let c = if y_is_zero(v) { v.x.inverse()? * w.x } else { v.y.inverse()? * w.y };
    UnitElement::normalize(c).map(Some)
}
