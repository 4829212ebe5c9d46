use alloc::vec::Vec;

use rand::Rng;

use super::rotation::Rotation;
use crate::algebra::{AlgebraElement, AlgebraTag};
use crate::error::{Error, Result};
use crate::hopf::Spinor;
use crate::linalg::{Matrix, Vector};
use crate::random::unit_vector;

const GENERATOR_TOL: f64 = 1e-12;
const O: AlgebraTag = AlgebraTag::Octonion;

/// `g(r, u) = ((r, L_ū), (L_u, −r))` with `r² + |u|² = 1`, u ∈ 𝕆.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinGenerator {
    r: f64,
    u: AlgebraElement,
}

impl SpinGenerator {
    pub fn new(r: f64, u: AlgebraElement) -> Result<Self> {
        if u.tag() != O {
            return Err(Error::UnsupportedAlgebra { operation: "spin generator", tag: u.tag() });
        }
        let norm_sq = r * r + u.norm_sq();
        if libm::fabs(norm_sq - 1.0) > GENERATOR_TOL {
            return Err(Error::GeneratorNotUnit { norm_sq });
        }
        Ok(SpinGenerator { r, u })
    }

    /// The generator whose normal `(r, ū)` is the unit 9-vector `w`.
    pub fn from_normal(w: &Vector) -> Result<Self> {
        if w.dim() != O.euclidean_dim() {
            return Err(Error::DimensionMismatch { expected: O.euclidean_dim(), actual: w.dim() });
        }
        let u_bar = AlgebraElement::new(O, &w.as_slice()[1..])?;
        Self::new(w[0], u_bar.conj())
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let w = unit_vector(O.euclidean_dim(), rng);
        Self::from_normal(&w).expect("unit normal")
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn u(&self) -> AlgebraElement {
        self.u
    }

    /// `(r, ū) ∈ ℝ⁹`.
    pub fn normal(&self) -> Vector {
        let mut w = Vector::zeros(O.euclidean_dim());
        w[0] = self.r;
        w.as_mut_slice()[1..].copy_from_slice(self.u.conj().coeffs());
        w
    }
}

/// A product `g₁ g₂ ⋯ g_m` of generators; the empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GeneratorWord {
    factors: Vec<SpinGenerator>,
}

impl GeneratorWord {
    pub fn new(factors: Vec<SpinGenerator>) -> Self {
        GeneratorWord { factors }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Self {
        GeneratorWord { factors: (0..len).map(|_| SpinGenerator::random(rng)).collect() }
    }

    pub fn factors(&self) -> &[SpinGenerator] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn push(&mut self, g: SpinGenerator) {
        self.factors.push(g);
    }

    /// `self ++ other`, i.e. the product `self · other`.
    pub fn concat(&self, other: &GeneratorWord) -> GeneratorWord {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        GeneratorWord { factors }
    }
}

/// `g(r, u)(x, y) = (rx + ūy, ux − ry)`.
pub fn generator_apply(g: &SpinGenerator, v: &Spinor) -> Result<Spinor> {
    if v.tag() != O {
        return Err(Error::UnsupportedAlgebra { operation: "generator action", tag: v.tag() });
    }
    let (x, y) = (v.x(), v.y());
    Spinor::new(x.scale(g.r) + g.u.conj() * y, g.u * x - y.scale(g.r))
}

/// `ρ(r, u) = 2wwᵗ − I₉` with `w = (r, ū)`.
pub fn generator_rotation(g: &SpinGenerator) -> Rotation {
    Rotation::from_matrix_unchecked(Matrix::reflection_complement(&g.normal()))
}

/// Applies the factors right to left.
pub fn word_apply(word: &GeneratorWord, v: &Spinor) -> Result<Spinor> {
    word.factors.iter().rev().try_fold(*v, |acc, g| generator_apply(g, &acc))
}

/// `ρ(g₁) ρ(g₂) ⋯ ρ(g_m)`.
pub fn word_rotation(word: &GeneratorWord) -> Rotation {
    word.factors
        .iter()
        .fold(Rotation::identity(O.euclidean_dim()), |acc, g| acc * generator_rotation(g))
}
