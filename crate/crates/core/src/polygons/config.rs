use alloc::vec::Vec;

use crate::algebra::AlgebraTag;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::spin::Rotation;
use crate::tolerance::Tolerances;

/// A closed k-gon of perimeter 1 in ℝⁿ, given by its edge vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct PolygonConfig {
    n: usize,
    edges: Vec<Vector>,
}

fn edge_sum(edges: &[Vector], n: usize) -> Vector {
    edges.iter().fold(Vector::zeros(n), |acc, e| acc + *e)
}

fn check_shape(edges: &[Vector]) -> Result<usize> {
    if edges.len() < 3 {
        return Err(Error::TooFewEdges(edges.len()));
    }
    let n = edges[0].dim();
    AlgebraTag::from_euclidean_dim(n)?;
    if let Some(e) = edges.iter().find(|e| e.dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, actual: e.dim() });
    }
    Ok(n)
}

impl PolygonConfig {
    /// Checks closure `|Σ eᵢ| ≤ 1e−10`, perimeter `|Σ|eᵢ| − 1| ≤ 1e−10` and
    /// that some edge is nonzero.
    pub fn new(edges: Vec<Vector>) -> Result<Self> {
        Self::with_tolerance(edges, Tolerances::DEFAULT.structure)
    }

    pub fn with_tolerance(edges: Vec<Vector>, tol: f64) -> Result<Self> {
        let n = check_shape(&edges)?;
        if edges.iter().all(|e| e.norm_sq() == 0.0) {
            return Err(Error::ZeroPolygon);
        }
        let residual = edge_sum(&edges, n).norm();
        if residual.is_nan() || residual > tol {
            return Err(Error::NotClosed { residual });
        }
        let perimeter: f64 = edges.iter().map(Vector::norm).sum();
        if perimeter.is_nan() || libm::fabs(perimeter - 1.0) > tol {
            return Err(Error::Perimeter { perimeter });
        }
        Ok(PolygonConfig { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.edges.len()
    }

    pub fn tag(&self) -> AlgebraTag {
        AlgebraTag::from_euclidean_dim(self.n).expect("validated dimension")
    }

    pub fn edges(&self) -> &[Vector] {
        &self.edges
    }

    pub fn closure_residual(&self) -> f64 {
        edge_sum(&self.edges, self.n).norm()
    }

    pub fn perimeter(&self) -> f64 {
        self.edges.iter().map(Vector::norm).sum()
    }

    /// Number l of edges longer than the degeneracy threshold; the fiber
    /// over the polygon is 𝔽(1)ˡ.
    pub fn fiber_dimension(&self) -> usize {
        let tol = Tolerances::DEFAULT.degenerate_edge;
        self.edges.iter().filter(|e| e.norm() >= tol).count()
    }

    /// Largest edge-wise distance to `other`.
    pub fn distance(&self, other: &PolygonConfig) -> f64 {
        self.edges.iter().zip(&other.edges).map(|(a, b)| a.distance(b)).fold(0.0, f64::max)
    }

    /// The same polygon with the first coordinate negated.
    pub fn mirror(&self) -> PolygonConfig {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let mut m = *e;
                m[0] = -m[0];
                m
            })
            .collect();
        PolygonConfig { n: self.n, edges }
    }
}

/// Scales a closed edge list to unit perimeter. Closure is checked relative
/// to the perimeter.
pub fn normalize(raw_edges: &[Vector]) -> Result<PolygonConfig> {
    let n = check_shape(raw_edges)?;
    let perimeter: f64 = raw_edges.iter().map(Vector::norm).sum();
    if perimeter == 0.0 {
        return Err(Error::ZeroPolygon);
    }
    let residual = edge_sum(raw_edges, n).norm() / perimeter;
    if residual.is_nan() || residual > Tolerances::DEFAULT.structure {
        return Err(Error::NotClosed { residual });
    }
    PolygonConfig::new(raw_edges.iter().map(|e| e.scale(1.0 / perimeter)).collect())
}

/// `(R·p)(i) = R·p(i)`.
pub fn rotate_polygon(rotation: &Rotation, p: &PolygonConfig) -> Result<PolygonConfig> {
    if rotation.dim() != p.n {
        return Err(Error::DimensionMismatch { expected: p.n, actual: rotation.dim() });
    }
    let edges = p.edges.iter().map(|e| rotation.apply(e)).collect();
    PolygonConfig::with_tolerance(edges, Tolerances::DEFAULT.composite)
}
