use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use super::{AlgebraTag, StructureTable};
use crate::error::{Error, Result};

/// An element of ℝ, ℂ, ℍ or 𝕆. Coefficients beyond `tag.dim()` are zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlgebraElement {
    tag: AlgebraTag,
    coeffs: [f64; 8],
}

impl AlgebraElement {
    pub const fn zero(tag: AlgebraTag) -> Self {
        AlgebraElement { tag, coeffs: [0.0; 8] }
    }

    /// The unit `e`.
    pub const fn one(tag: AlgebraTag) -> Self {
        Self::real(tag, 1.0)
    }

    pub const fn real(tag: AlgebraTag, value: f64) -> Self {
        let mut coeffs = [0.0; 8];
        coeffs[0] = value;
        AlgebraElement { tag, coeffs }
    }

    /// The basis element `e_index` (`e₀ = e`).
    pub fn basis(tag: AlgebraTag, index: usize) -> Result<Self> {
        if index >= tag.dim() {
            return Err(Error::BasisIndex { tag, index });
        }
        let mut coeffs = [0.0; 8];
        coeffs[index] = 1.0;
        Ok(AlgebraElement { tag, coeffs })
    }

    pub fn new(tag: AlgebraTag, coeffs: &[f64]) -> Result<Self> {
        if coeffs.len() != tag.dim() {
            return Err(Error::CoefficientCount { expected: tag.dim(), actual: coeffs.len() });
        }
        let mut c = [0.0; 8];
        c[..coeffs.len()].copy_from_slice(coeffs);
        Ok(AlgebraElement { tag, coeffs: c })
    }

    pub(crate) fn from_raw(tag: AlgebraTag, coeffs: [f64; 8]) -> Self {
        debug_assert!(coeffs[tag.dim()..].iter().all(|&c| c == 0.0));
        AlgebraElement { tag, coeffs }
    }

    pub const fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs[..self.tag.dim()]
    }

    fn check_tag(&self, other: &Self) -> Result<()> {
        if self.tag == other.tag {
            Ok(())
        } else {
            Err(Error::TagMismatch { left: self.tag, right: other.tag })
        }
    }

    /// Product through the canonical table for the tag.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        StructureTable::for_tag(self.tag).mul(self, other)
    }

    /// `ā = 2⟨a, e⟩e − a`.
    pub fn conj(&self) -> Self {
        let mut out = *self;
        out.coeffs[1..].iter_mut().for_each(|c| *c = -*c);
        out
    }

    pub fn norm_sq(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sq())
    }

    pub fn try_inner(&self, other: &Self) -> Result<f64> {
        self.check_tag(other)?;
        Ok(self.dot(other))
    }

    /// Euclidean inner product; panics if the tags differ.
    pub fn inner(&self, other: &Self) -> f64 {
        self.try_inner(other).unwrap_or_else(|e| panic!("{e}"))
    }

    fn dot(&self, other: &Self) -> f64 {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum()
    }

    /// `ā / |a|²`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm_sq();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::NotInvertible);
        }
        Ok(self.conj().scale(1.0 / n))
    }

    pub fn real_part(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn imag_part(&self) -> Self {
        let mut out = *self;
        out.coeffs[0] = 0.0;
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = *self;
        out.coeffs.iter_mut().for_each(|c| *c *= s);
        out
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (*self - *other).norm()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    /// Views the element inside a larger algebra through the standard
    /// subalgebra chain ℝ ⊂ ℂ ⊂ ℍ ⊂ 𝕆.
    pub fn embed(&self, target: AlgebraTag) -> Result<Self> {
        if target.dim() < self.tag.dim() {
            return Err(Error::TagMismatch { left: self.tag, right: target });
        }
        let mut out = AlgebraElement::zero(target);
        let target_basis = target.octonion_basis();
        for (i, &slot) in self.tag.octonion_basis().iter().enumerate() {
            let pos = target_basis
                .iter()
                .position(|&t| t == slot)
                .ok_or(Error::TagMismatch { left: self.tag, right: target })?;
            out.coeffs[pos] = self.coeffs[i];
        }
        Ok(out)
    }
}

impl StructureTable {
    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        a.check_tag(b)?;
        if a.tag.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), actual: a.tag.dim() });
        }
        Ok(AlgebraElement::from_raw(a.tag, self.product(&a.coeffs, &b.coeffs)))
    }
}

impl Mul for AlgebraElement {
    type Output = AlgebraElement;

    /// Panics when the algebras differ; use [`AlgebraElement::try_mul`] for
    /// a checked product.
    #[inline]
    fn mul(self, rhs: AlgebraElement) -> AlgebraElement {
        assert_eq!(self.tag, rhs.tag, "incompatible algebras");
        let table = StructureTable::for_tag(self.tag);
        AlgebraElement::from_raw(self.tag, table.product(&self.coeffs, &rhs.coeffs))
    }
}

impl Mul<f64> for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: f64) -> AlgebraElement {
        self.scale(rhs)
    }
}

impl Mul<AlgebraElement> for f64 {
    type Output = AlgebraElement;
    fn mul(self, rhs: AlgebraElement) -> AlgebraElement {
        rhs.scale(self)
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(mut self, rhs: AlgebraElement) -> AlgebraElement {
        self += rhs;
        self
    }
}

impl AddAssign for AlgebraElement {
    fn add_assign(&mut self, rhs: AlgebraElement) {
        assert_eq!(self.tag, rhs.tag, "incompatible algebras");
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: AlgebraElement) -> AlgebraElement {
        self + (-rhs)
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(-1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use AlgebraTag::*;

    fn e(i: usize) -> AlgebraElement {
        AlgebraElement::basis(Octonion, i).unwrap()
    }

    fn oct(c: &[(usize, f64)]) -> AlgebraElement {
        let mut coeffs = [0.0; 8];
        for &(i, v) in c {
            coeffs[i] = v;
        }
        AlgebraElement::new(Octonion, &coeffs).unwrap()
    }

    #[test]
    fn e1_e2_is_e4() {
        assert_eq!(e(1) * e(2), e(4));
    }

    #[test]
    fn unit_is_neutral() {
        let x = oct(&[(0, 0.3), (3, -1.5), (7, 2.0)]);
        assert_eq!(AlgebraElement::one(Octonion) * x, x);
        assert_eq!(x * AlgebraElement::one(Octonion), x);
    }

    #[test]
    fn non_associativity_witness() {
        assert_eq!((e(1) * e(2)) * (e(2) * e(3)), e(7));
        assert_eq!(e(1) * ((e(2) * e(2)) * e(3)), -e(7));
        assert_eq!((e(1) * (e(2) * e(2))) * e(3), -e(7));
    }

    #[test]
    fn conj_examples() {
        let a = oct(&[(0, 1.0), (1, 1.0)]);
        assert_eq!(a.conj(), oct(&[(0, 1.0), (1, -1.0)]));
        assert_eq!(e(0).conj(), e(0));
        let b = oct(&[(1, 1.0), (5, 2.0)]);
        assert_eq!(b * b.conj(), AlgebraElement::real(Octonion, 5.0));
    }

    #[test]
    fn norms_and_inner_products() {
        assert_eq!(AlgebraElement::zero(Octonion).norm_sq(), 0.0);
        assert_eq!(e(3).norm_sq(), 1.0);
        assert_eq!(oct(&[(0, 1.0), (1, 1.0), (2, 1.0), (4, 1.0)]).norm_sq(), 4.0);
        assert_eq!(e(1).inner(&e(2)), 0.0);
        assert_eq!((e(1) * e(2)).inner(&e(4)), 1.0);
        let x = oct(&[(2, 3.0), (6, -4.0)]);
        assert_eq!(x.inner(&x), x.norm_sq());
    }

    #[test]
    fn inverses() {
        assert_eq!(e(0).inverse().unwrap(), e(0));
        assert_eq!(e(2).inverse().unwrap(), -e(2));
        assert_eq!(e(1).scale(2.0).inverse().unwrap(), e(1).scale(-0.5));
        assert_eq!(AlgebraElement::zero(Quaternion).inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn real_and_imaginary_parts() {
        let a = oct(&[(0, 3.0), (5, 1.0)]);
        assert_eq!(a.real_part(), 3.0);
        assert_eq!(a.imag_part(), e(5));
        assert_eq!((e(1) * e(1)).real_part(), -1.0);
    }

    #[test]
    fn tag_mismatch_is_an_error() {
        let a = AlgebraElement::one(Complex);
        let b = AlgebraElement::one(Quaternion);
        assert_eq!(a.try_mul(&b), Err(Error::TagMismatch { left: Complex, right: Quaternion }));
        assert!(a.try_inner(&b).is_err());
    }

    #[test]
    fn constructor_checks_length() {
        assert!(AlgebraElement::new(Complex, &[1.0, 2.0, 3.0]).is_err());
        assert!(AlgebraElement::basis(Quaternion, 4).is_err());
    }

    #[test]
    fn subalgebras_multiply_like_their_embeddings() {
        for tag in [Complex, Quaternion] {
            for i in 0..tag.dim() {
                for j in 0..tag.dim() {
                    let a = AlgebraElement::basis(tag, i).unwrap();
                    let b = AlgebraElement::basis(tag, j).unwrap();
                    let small = (a * b).embed(Octonion).unwrap();
                    let big = a.embed(Octonion).unwrap() * b.embed(Octonion).unwrap();
                    assert_eq!(small, big, "{tag}: e{i} e{j}");
                }
            }
        }
    }
}
