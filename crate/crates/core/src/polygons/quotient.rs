use alloc::vec::Vec;

use super::config::PolygonConfig;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};

/// Residual length below which an edge counts as dependent on the
/// previously selected ones.
pub const RANK_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Positive,
    Negative,
    /// The edges span less than ℝⁿ; SO(n) and O(n) classes coincide.
    Null,
}

/// Gram matrix of the edges together with an orientation sign: a complete
/// invariant of the SO(n)-orbit.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientInvariant {
    k: usize,
    rank: usize,
    gram: Vec<f64>,
    orientation: Orientation,
}

impl QuotientInvariant {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn gram(&self, i: usize, j: usize) -> f64 {
        self.gram[i * self.k + j]
    }

    /// Row-major k×k entries.
    pub fn gram_entries(&self) -> &[f64] {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Largest entrywise difference of the Gram matrices.
    pub fn gram_deviation(&self, other: &QuotientInvariant) -> Result<f64> {
        if self.k != other.k {
            return Err(Error::DimensionMismatch { expected: self.k, actual: other.k });
        }
        Ok(self.gram.iter().zip(&other.gram).map(|(a, b)| libm::fabs(a - b)).fold(0.0, f64::max))
    }
}

/// Indices of the lexicographically first maximal independent set of edges,
/// found by greedy Gram–Schmidt.
pub fn independent_edges(edges: &[Vector]) -> Vec<usize> {
    let Some(first) = edges.first() else { return Vec::new() };
    let n = first.dim();
    let mut basis: Vec<Vector> = Vec::with_capacity(n);
    let mut chosen = Vec::with_capacity(n);
    for (i, e) in edges.iter().enumerate() {
        if basis.len() == n {
            break;
        }
        let mut r = *e;
        for b in &basis {
            r = r - b.scale(b.dot(&r));
        }
        let len = r.norm();
        if len > RANK_TOL {
            basis.push(r.scale(1.0 / len));
            chosen.push(i);
        }
    }
    chosen
}

pub fn quotient_invariant(p: &PolygonConfig) -> QuotientInvariant {
    let edges = p.edges();
    let k = edges.len();
    let mut gram = Vec::with_capacity(k * k);
    for a in edges {
        for b in edges {
            gram.push(a.dot(b));
        }
    }
    let chosen = independent_edges(edges);
    let orientation = if chosen.len() < p.n() {
        Orientation::Null
    } else {
        let cols: Vec<Vector> = chosen.iter().map(|&i| edges[i]).collect();
        let det = Matrix::from_columns(&cols).expect("n columns of length n").det();
        if det > 0.0 {
            Orientation::Positive
        } else {
            Orientation::Negative
        }
    };
    QuotientInvariant { k, rank: chosen.len(), gram, orientation }
}

fn check_shapes(p: &PolygonConfig, q: &PolygonConfig) -> Result<()> {
    if p.n() != q.n() {
        return Err(Error::DimensionMismatch { expected: p.n(), actual: q.n() });
    }
    if p.k() != q.k() {
        return Err(Error::DimensionMismatch { expected: p.k(), actual: q.k() });
    }
    Ok(())
}

/// Same class in SO(n)∖M_k: Gram matrices within `tol` and equal orientation.
pub fn equivalent_mod_so(p: &PolygonConfig, q: &PolygonConfig, tol: f64) -> Result<bool> {
    check_shapes(p, q)?;
    let (a, b) = (quotient_invariant(p), quotient_invariant(q));
    Ok(a.gram_deviation(&b)? <= tol && a.orientation == b.orientation)
}

/// Same class in O(n)∖M_k: Gram matrices within `tol`.
pub fn equivalent_mod_o(p: &PolygonConfig, q: &PolygonConfig, tol: f64) -> Result<bool> {
    check_shapes(p, q)?;
    quotient_invariant(p).gram_deviation(&quotient_invariant(q)).map(|d| d <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraTag;
    use crate::polygons::{normalize, phi_k, rotate_polygon, sample_stiefel};
    use crate::random::rng_from_seed;
    use crate::spin::Rotation;

    fn v(c: &[f64]) -> Vector {
        Vector::from_slice(c).unwrap()
    }

    fn random_polygon(tag: AlgebraTag, k: usize, seed: u64) -> PolygonConfig {
        phi_k(&sample_stiefel(tag, k, seed).unwrap()).unwrap()
    }

    #[test]
    fn equilateral_triangle_gram() {
        let h = libm::sqrt(3.0) / 4.0;
        let p = normalize(&[v(&[0.5, 0.0]), v(&[-0.25, h]), v(&[-0.25, -h])]).unwrap();
        let inv = quotient_invariant(&p);
        for i in 0..3 {
            assert!((inv.gram(i, i) - 1.0 / 9.0).abs() < 1e-15);
        }
        assert_eq!(inv.rank(), 2);
        assert_eq!(inv.orientation(), Orientation::Positive);
    }

    #[test]
    fn rotations_preserve_and_mirrors_flip() {
        let mut rng = rng_from_seed(21);
        for tag in AlgebraTag::ALL {
            let p = random_polygon(tag, 12, tag.dim() as u64);
            let r = Rotation::random(p.n(), &mut rng);
            let q = rotate_polygon(&r, &p).unwrap();
            assert!(equivalent_mod_so(&p, &q, 1e-12).unwrap());
            assert!(equivalent_mod_o(&p, &q, 1e-12).unwrap());
            let m = p.mirror();
            assert!(!equivalent_mod_so(&p, &m, 1e-12).unwrap());
            assert!(equivalent_mod_o(&p, &m, 1e-12).unwrap());
            let (a, b) = (quotient_invariant(&p), quotient_invariant(&m));
            assert_eq!(a.gram_deviation(&b).unwrap(), 0.0);
            assert_ne!(a.orientation(), b.orientation());
        }
    }

    #[test]
    fn generic_polygons_differ() {
        let p = random_polygon(AlgebraTag::Quaternion, 8, 1);
        let q = random_polygon(AlgebraTag::Quaternion, 8, 2);
        assert!(!equivalent_mod_o(&p, &q, 1e-9).unwrap());
        let mut swapped = p.edges().to_vec();
        swapped.swap(0, 1);
        let s = PolygonConfig::new(swapped).unwrap();
        assert!(!equivalent_mod_so(&p, &s, 1e-9).unwrap());
    }

    #[test]
    fn low_rank_has_null_orientation() {
        let p = random_polygon(AlgebraTag::Octonion, 5, 3);
        let inv = quotient_invariant(&p);
        assert_eq!(inv.rank(), 4);
        assert_eq!(inv.orientation(), Orientation::Null);
        assert!(equivalent_mod_so(&p, &p.mirror(), 1e-12).unwrap());
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let p = random_polygon(AlgebraTag::Complex, 4, 1);
        let q = random_polygon(AlgebraTag::Complex, 5, 1);
        assert!(equivalent_mod_so(&p, &q, 1e-9).is_err());
        let r = random_polygon(AlgebraTag::Quaternion, 4, 1);
        assert!(equivalent_mod_o(&p, &r, 1e-9).is_err());
    }
}
