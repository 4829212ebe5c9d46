//! The four normed division algebras ℝ, ℂ, ℍ, 𝕆.
//!
//! Elements are dense coefficient vectors over the orthonormal basis
//! `e, e₁, …, e_{d−1}`. ℂ and ℍ use the numbering of their own basis; the
//! embedding into 𝕆 sends ℍ's `(1, i, j, k)` to `(e, e₁, e₂, e₄)`.

mod element;
mod table;

use core::fmt;
use core::str::FromStr;

pub use element::AlgebraElement;
pub use table::{
    octonion_relations, SignedIndex, StructureTable, CAYLEY_DICKSON_RELABEL, COMPLEX_BASIS,
    OCTONION_TABLE, QUATERNION_BASIS,
};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraTag {
    Real,
    Complex,
    Quaternion,
    Octonion,
}

impl AlgebraTag {
    pub const ALL: [AlgebraTag; 4] =
        [AlgebraTag::Real, AlgebraTag::Complex, AlgebraTag::Quaternion, AlgebraTag::Octonion];
    /// The associative members, where SU(2, 𝔽) is an honest matrix group.
    pub const ASSOCIATIVE: [AlgebraTag; 3] =
        [AlgebraTag::Real, AlgebraTag::Complex, AlgebraTag::Quaternion];

    pub const fn dim(self) -> usize {
        match self {
            AlgebraTag::Real => 1,
            AlgebraTag::Complex => 2,
            AlgebraTag::Quaternion => 4,
            AlgebraTag::Octonion => 8,
        }
    }

    pub fn from_dim(dim: usize) -> Result<Self> {
        match dim {
            1 => Ok(AlgebraTag::Real),
            2 => Ok(AlgebraTag::Complex),
            4 => Ok(AlgebraTag::Quaternion),
            8 => Ok(AlgebraTag::Octonion),
            d => Err(Error::InvalidAlgebraDimension(d)),
        }
    }

    /// Dimension of ℝ⊕𝔽, the space the polygons live in.
    pub const fn euclidean_dim(self) -> usize {
        1 + self.dim()
    }

    pub fn from_euclidean_dim(n: usize) -> Result<Self> {
        match n {
            2 | 3 | 5 | 9 => Self::from_dim(n - 1),
            _ => Err(Error::DimensionMismatch { expected: 9, actual: n }),
        }
    }

    pub const fn symbol(self) -> char {
        match self {
            AlgebraTag::Real => 'R',
            AlgebraTag::Complex => 'C',
            AlgebraTag::Quaternion => 'H',
            AlgebraTag::Octonion => 'O',
        }
    }

    pub const fn is_associative(self) -> bool {
        !matches!(self, AlgebraTag::Octonion)
    }

    /// Positions of this algebra's basis inside the octonion basis.
    pub const fn octonion_basis(self) -> &'static [usize] {
        match self {
            AlgebraTag::Real => &[0],
            AlgebraTag::Complex => &COMPLEX_BASIS,
            AlgebraTag::Quaternion => &QUATERNION_BASIS,
            AlgebraTag::Octonion => &[0, 1, 2, 3, 4, 5, 6, 7],
        }
    }
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for AlgebraTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" => Ok(AlgebraTag::Real),
            "C" | "c" => Ok(AlgebraTag::Complex),
            "H" | "h" => Ok(AlgebraTag::Quaternion),
            "O" | "o" => Ok(AlgebraTag::Octonion),
            _ => Err(Error::UnknownAlgebra),
        }
    }
}
