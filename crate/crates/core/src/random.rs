//! Seeded sampling helpers. Every random quantity in the crate flows from an
//! explicit `u64` seed; ensembles derive one ChaCha stream per sample index
//! so that sample `i` depends only on `(seed, i)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::algebra::{AlgebraElement, AlgebraTag};
use crate::hopf::{Spinor, UnitElement};
use crate::linalg::Vector;

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream number `index` under `seed`.
pub fn substream(seed: u64, index: u64) -> SeededRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

/// An element with independent standard-normal coefficients.
pub fn gaussian_element<R: Rng + ?Sized>(tag: AlgebraTag, rng: &mut R) -> AlgebraElement {
    let mut coeffs = [0.0; 8];
    for c in coeffs.iter_mut().take(tag.dim()) {
        *c = gaussian(rng);
    }
    AlgebraElement::new(tag, &coeffs[..tag.dim()]).expect("length matches tag")
}

/// A uniformly distributed point of the unit sphere 𝔽(1).
pub fn unit_element<R: Rng + ?Sized>(tag: AlgebraTag, rng: &mut R) -> UnitElement {
    loop {
        if let Ok(u) = UnitElement::normalize(gaussian_element(tag, rng)) {
            return u;
        }
    }
}

pub fn spinor<R: Rng + ?Sized>(tag: AlgebraTag, rng: &mut R) -> Spinor {
    Spinor::new(gaussian_element(tag, rng), gaussian_element(tag, rng)).expect("same tag")
}

pub fn gaussian_vector<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vector {
    let mut v = Vector::zeros(dim);
    for i in 0..dim {
        v[i] = gaussian(rng);
    }
    v
}

pub fn unit_vector<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vector {
    loop {
        let v = gaussian_vector(dim, rng);
        let n = v.norm();
        if n > 1e-12 {
            return v.scale(1.0 / n);
        }
    }
}
