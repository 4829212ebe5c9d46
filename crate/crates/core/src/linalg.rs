//! Fixed-capacity real vectors and square matrices of size at most 9, the
//! largest Euclidean space ℝ⊕𝕆 the construction needs.

use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};

pub const MAX_DIM: usize = 9;

/// A real vector of length `dim ≤ 9`, stored inline.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vector {
    dim: usize,
    data: [f64; MAX_DIM],
}

impl Vector {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "vector dimension {dim} exceeds {MAX_DIM}");
        Vector { dim, data: [0.0; MAX_DIM] }
    }

    pub fn from_slice(values: &[f64]) -> Result<Self> {
        if values.len() > MAX_DIM {
            return Err(Error::DimensionMismatch { expected: MAX_DIM, actual: values.len() });
        }
        let mut v = Vector::zeros(values.len());
        v.data[..values.len()].copy_from_slice(values);
        Ok(v)
    }

    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = Vector::zeros(dim);
        v.data[index] = 1.0;
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data[..self.dim]
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data[..self.dim]
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.dim, other.dim);
        self.as_slice().iter().zip(other.as_slice()).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sq())
    }

    pub fn scale(&self, s: f64) -> Vector {
        let mut out = *self;
        out.as_mut_slice().iter_mut().for_each(|v| *v *= s);
        out
    }

    pub fn distance(&self, other: &Vector) -> f64 {
        (*self - *other).norm()
    }
}

impl Index<usize> for Vector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.as_slice()[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        &mut self.as_mut_slice()[i]
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(mut self, rhs: Vector) -> Vector {
        assert_eq!(self.dim, rhs.dim, "vector dimension mismatch");
        for i in 0..self.dim {
            self.data[i] += rhs.data[i];
        }
        self
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(mut self, rhs: Vector) -> Vector {
        assert_eq!(self.dim, rhs.dim, "vector dimension mismatch");
        for i in 0..self.dim {
            self.data[i] -= rhs.data[i];
        }
        self
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        self.scale(-1.0)
    }
}

/// A real `dim × dim` matrix with `dim ≤ 9`, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: [[f64; MAX_DIM]; MAX_DIM],
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "matrix dimension {dim} exceeds {MAX_DIM}");
        Matrix { dim, data: [[0.0; MAX_DIM]; MAX_DIM] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Matrix::zeros(dim);
        for i in 0..dim {
            m.data[i][i] = 1.0;
        }
        m
    }

    /// Builds a matrix from row slices; every row must have `rows.len()` entries.
    pub fn from_rows(rows: &[&[f64]]) -> Result<Self> {
        let dim = rows.len();
        if dim > MAX_DIM {
            return Err(Error::DimensionMismatch { expected: MAX_DIM, actual: dim });
        }
        let mut m = Matrix::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, actual: row.len() });
            }
            m.data[i][..dim].copy_from_slice(row);
        }
        Ok(m)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vector]) -> Result<Self> {
        let dim = columns.len();
        let mut m = Matrix::zeros(dim);
        for (j, c) in columns.iter().enumerate() {
            if c.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, actual: c.dim() });
            }
            for i in 0..dim {
                m.data[i][j] = c[i];
            }
        }
        Ok(m)
    }

    /// `2·w·wᵗ − I` for a unit vector `w`.
    pub fn reflection_complement(w: &Vector) -> Self {
        let n = w.dim();
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i][j] = 2.0 * w[i] * w[j] - if i == j { 1.0 } else { 0.0 };
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        assert!(row < self.dim && col < self.dim);
        self.data[row][col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        assert!(row < self.dim && col < self.dim);
        self.data[row][col] = value;
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.data[row][..self.dim]
    }

    pub fn column(&self, col: usize) -> Vector {
        let mut v = Vector::zeros(self.dim);
        for i in 0..self.dim {
            v[i] = self.data[i][col];
        }
        v
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.data[j][i] = self.data[i][j];
            }
        }
        t
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.dim, v.dim(), "matrix/vector dimension mismatch");
        let mut out = Vector::zeros(self.dim);
        for i in 0..self.dim {
            out[i] = self.row(i).iter().zip(v.as_slice()).map(|(a, b)| a * b).sum();
        }
        out
    }

    pub fn frobenius_distance(&self, other: &Matrix) -> f64 {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        let mut acc = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let d = self.data[i][j] - other.data[i][j];
                acc += d * d;
            }
        }
        libm::sqrt(acc)
    }

    /// Largest entry of `|M·Mᵗ − I|`.
    pub fn orthogonality_residual(&self) -> f64 {
        let p = *self * self.transpose();
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max(libm::fabs(p.data[i][j] - target));
            }
        }
        worst
    }

    /// Largest entry of `|M − Mᵗ|`.
    pub fn symmetry_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                worst = worst.max(libm::fabs(self.data[i][j] - self.data[j][i]));
            }
        }
        worst
    }

    /// Determinant by LU factorisation with partial pivoting.
    pub fn det(&self) -> f64 {
        let n = self.dim;
        let mut a = self.data;
        let mut det = 1.0;
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| libm::fabs(a[i][col]).total_cmp(&libm::fabs(a[j][col])))
                .unwrap_or(col);
            if a[pivot][col] == 0.0 {
                return 0.0;
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det *= a[col][col];
            for row in col + 1..n {
                let factor = a[row][col] / a[col][col];
                let pivot_row = a[col];
                for (x, p) in a[row][col..n].iter_mut().zip(&pivot_row[col..n]) {
                    *x -= factor * p;
                }
            }
        }
        det
    }

    /// Inverse by Gauss–Jordan elimination; `None` when a pivot vanishes.
    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.dim;
        let mut a = self.data;
        let mut inv = Matrix::identity(n).data;
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| libm::fabs(a[i][col]).total_cmp(&libm::fabs(a[j][col])))?;
            if a[pivot][col] == 0.0 {
                return None;
            }
            a.swap(pivot, col);
            inv.swap(pivot, col);
            let p = a[col][col];
            for k in 0..n {
                a[col][k] /= p;
                inv[col][k] /= p;
            }
            for row in 0..n {
                if row != col {
                    let factor = a[row][col];
                    if factor != 0.0 {
                        for k in 0..n {
                            a[row][k] -= factor * a[col][k];
                            inv[row][k] -= factor * inv[col][k];
                        }
                    }
                }
            }
        }
        Some(Matrix { dim: n, data: inv })
    }
}

impl Mul for Matrix {
    type Output = Matrix;
    fn mul(self, rhs: Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i][k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i][j] += a * rhs.data[k][j];
                }
            }
        }
        out
    }
}

impl Neg for Matrix {
    type Output = Matrix;
    fn neg(mut self) -> Matrix {
        for i in 0..self.dim {
            for j in 0..self.dim {
                self.data[i][j] = -self.data[i][j];
            }
        }
        self
    }
}

/// Modified Gram–Schmidt on the columns of `m`. Returns `None` if a column
/// falls below `tol` after projection.
pub fn orthonormalize_columns(m: &Matrix, tol: f64) -> Option<Matrix> {
    let n = m.dim();
    let mut cols: [Vector; MAX_DIM] = [Vector::zeros(n); MAX_DIM];
    for j in 0..n {
        let mut c = m.column(j);
        for prev in cols.iter().take(j) {
            let p = prev.dot(&c);
            c = c - prev.scale(p);
        }
        let len = c.norm();
        if len < tol {
            return None;
        }
        cols[j] = c.scale(1.0 / len);
    }
    Matrix::from_columns(&cols[..n]).ok()
}

const JACOBI_SWEEPS: usize = 60;

/// The rotation `U Vᵗ` nearest to `m`, from a one-sided Jacobi SVD
/// `m = U Σ Vᵗ`, with the column of U for the smallest singular value
/// flipped when `det(U Vᵗ) < 0`. Singular directions of `m` are completed
/// to an orthonormal basis.
pub fn nearest_rotation(m: &Matrix) -> Matrix {
    let n = m.dim;
    let mut a = m.data;
    let mut v = Matrix::identity(n).data;
    for _ in 0..JACOBI_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let (mut alpha, mut beta, mut gamma) = (0.0, 0.0, 0.0);
                for row in a.iter().take(n) {
                    alpha += row[p] * row[p];
                    beta += row[q] * row[q];
                    gamma += row[p] * row[q];
                }
                if gamma == 0.0 || libm::fabs(gamma) <= f64::EPSILON * libm::sqrt(alpha * beta) {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = libm::copysign(1.0, zeta) / (libm::fabs(zeta) + libm::sqrt(1.0 + zeta * zeta));
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = c * t;
                for rows in [&mut a, &mut v] {
                    for row in rows.iter_mut().take(n) {
                        let (x, y) = (row[p], row[q]);
                        row[p] = c * x - s * y;
                        row[q] = s * x + c * y;
                    }
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let column = |data: &[[f64; MAX_DIM]; MAX_DIM], j: usize| {
        let mut c = Vector::zeros(n);
        for i in 0..n {
            c[i] = data[i][j];
        }
        c
    };
    let mut order: [usize; MAX_DIM] = core::array::from_fn(|j| j);
    let sigma: [f64; MAX_DIM] = core::array::from_fn(|j| if j < n { column(&a, j).norm() } else { 0.0 });
    order[..n].sort_by(|&i, &j| sigma[j].total_cmp(&sigma[i]));
    let floor = sigma[order[0]] * f64::EPSILON * n as f64;
    let mut u: [Vector; MAX_DIM] = [Vector::zeros(n); MAX_DIM];
    let mut done: [usize; MAX_DIM] = [0; MAX_DIM];
    let mut filler = 0;
    for (rank, &j) in order[..n].iter().enumerate() {
        let mut c = column(&a, j);
        if sigma[j] <= floor {
            c = Vector::zeros(n);
        }
        loop {
            for &prev in &done[..rank] {
                let p = u[prev].dot(&c);
                c = c - u[prev].scale(p);
            }
            let len = c.norm();
            if len > 0.5 || (len > 0.0 && sigma[j] > floor) {
                u[j] = c.scale(1.0 / len);
                break;
            }
            c = Vector::basis(n, filler);
            filler += 1;
        }
        done[rank] = j;
    }
    let mut u = Matrix::from_columns(&u[..n]).expect("n columns of length n");
    let v = Matrix { dim: n, data: v };
    if u.det() * v.det() < 0.0 {
        let last = order[n - 1];
        for i in 0..n {
            u.data[i][last] = -u.data[i][last];
        }
    }
    u * v.transpose()
}
