//! Signed-index multiplication tables.
//!
//! The octonion table is generated from the cyclic relation family on the
//! imaginary units `e₁ … e₇` (indices mod 7):
//!
//! ```text
//! eᵢ² = −1,  eᵢ e_{i+1} = e_{i+3},  e_{i+1} e_{i+3} = eᵢ,  e_{i+3} eᵢ = e_{i+1}
//! ```
//!
//! together with the reversed products, which pick up a sign. A second
//! table is generated independently by Cayley–Dickson doubling of ℍ and
//! relabelled onto the same basis; the two must agree entry for entry,
//! which is checked in a `const` item so a transcription error fails the
//! build. ℂ and ℍ are restrictions of the octonion table to `{e, e₁}` and
//! `{e, e₁, e₂, e₄}`.

use super::AlgebraTag;

/// `±e_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedIndex {
    pub negative: bool,
    pub index: u8,
}

impl SignedIndex {
    pub const fn pos(index: u8) -> Self {
        SignedIndex { negative: false, index }
    }

    pub const fn neg(index: u8) -> Self {
        SignedIndex { negative: true, index }
    }

    pub const fn sign(&self) -> f64 {
        if self.negative {
            -1.0
        } else {
            1.0
        }
    }

    const fn times(self, other: SignedIndex) -> SignedIndex {
        SignedIndex { negative: self.negative != other.negative, index: other.index }
    }

    const fn negated(self) -> SignedIndex {
        SignedIndex { negative: !self.negative, index: self.index }
    }
}

/// `entries[i][j]` is the signed basis element equal to `eᵢ · eⱼ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureTable {
    dim: usize,
    entries: [[SignedIndex; 8]; 8],
}

/// Basis of ℍ inside 𝕆: `1, i = e₁, j = e₂, k = e₄`.
pub const QUATERNION_BASIS: [usize; 4] = [0, 1, 2, 4];
/// Basis of ℂ inside 𝕆.
pub const COMPLEX_BASIS: [usize; 2] = [0, 1];

/// Cayley–Dickson basis `(1, i, j, k, l, il, jl, kl)` written in the
/// cyclic basis, taking the doubling unit `l = e₃`.
pub const CAYLEY_DICKSON_RELABEL: [SignedIndex; 8] = [
    SignedIndex::pos(0),
    SignedIndex::pos(1),
    SignedIndex::pos(2),
    SignedIndex::pos(4),
    SignedIndex::pos(3),
    SignedIndex::pos(7),
    SignedIndex::pos(5),
    SignedIndex::neg(6),
];

const fn cyc(i: usize) -> usize {
    (i - 1) % 7 + 1
}

impl StructureTable {
    const EMPTY: [[SignedIndex; 8]; 8] = [[SignedIndex::pos(0); 8]; 8];

    /// The octonion table generated from the seven-fold cyclic relations.
    pub const fn from_relations() -> Self {
        let mut entries = Self::EMPTY;
        let mut i = 0;
        while i < 8 {
            entries[0][i] = SignedIndex::pos(i as u8);
            entries[i][0] = SignedIndex::pos(i as u8);
            if i > 0 {
                entries[i][i] = SignedIndex::neg(0);
            }
            i += 1;
        }
        let mut i = 1;
        while i <= 7 {
            let (a, b, c) = (i, cyc(i + 1), cyc(i + 3));
            entries[a][b] = SignedIndex::pos(c as u8);
            entries[b][a] = SignedIndex::neg(c as u8);
            entries[b][c] = SignedIndex::pos(a as u8);
            entries[c][b] = SignedIndex::neg(a as u8);
            entries[c][a] = SignedIndex::pos(b as u8);
            entries[a][c] = SignedIndex::neg(b as u8);
            i += 1;
        }
        StructureTable { dim: 8, entries }
    }

    /// The table of the `2^level`-dimensional Cayley–Dickson algebra with
    /// `(a, b)(c, d) = (ac − d̄b, da + bc̄)`, in its native basis.
    pub const fn cayley_dickson(level: u32) -> Self {
        assert!(level <= 3, "only levels up to the octonions fit the table");
        let dim = 1usize << level;
        let mut entries = Self::EMPTY;
        let mut i = 0;
        while i < dim {
            let mut j = 0;
            while j < dim {
                entries[i][j] = cd_product(i, j, level);
                j += 1;
            }
            i += 1;
        }
        StructureTable { dim, entries }
    }

    /// Re-expresses the table in a new basis: `map[m]` is old basis element
    /// `m` written as a signed element of the new basis.
    pub const fn relabeled(&self, map: &[SignedIndex; 8]) -> Self {
        let mut inverse = [SignedIndex::pos(0); 8];
        let mut m = 0;
        while m < self.dim {
            let t = map[m];
            inverse[t.index as usize] = SignedIndex { negative: t.negative, index: m as u8 };
            m += 1;
        }
        let mut entries = Self::EMPTY;
        let mut a = 0;
        while a < self.dim {
            let mut b = 0;
            while b < self.dim {
                // e'_a e'_b = (s_a s_b) old(p q) with e'_a = s_a old_p
                let pa = inverse[a];
                let pb = inverse[b];
                let prod = self.entries[pa.index as usize][pb.index as usize];
                let mapped = map[prod.index as usize];
                let negative = pa.negative ^ pb.negative ^ prod.negative ^ mapped.negative;
                entries[a][b] = SignedIndex { negative, index: mapped.index };
                b += 1;
            }
            a += 1;
        }
        StructureTable { dim: self.dim, entries }
    }

    /// Restricts to the subalgebra spanned by `basis`, renumbered `0..len`.
    /// Panics if the span is not closed under multiplication.
    pub const fn restricted(&self, basis: &[usize]) -> Self {
        let mut entries = Self::EMPTY;
        let mut a = 0;
        while a < basis.len() {
            let mut b = 0;
            while b < basis.len() {
                let prod = self.entries[basis[a]][basis[b]];
                let mut k = 0;
                let mut found = usize::MAX;
                while k < basis.len() {
                    if basis[k] == prod.index as usize {
                        found = k;
                    }
                    k += 1;
                }
                assert!(found != usize::MAX, "basis does not span a subalgebra");
                entries[a][b] = SignedIndex { negative: prod.negative, index: found as u8 };
                b += 1;
            }
            a += 1;
        }
        StructureTable { dim: basis.len(), entries }
    }

    pub const fn const_eq(&self, other: &StructureTable) -> bool {
        if self.dim != other.dim {
            return false;
        }
        let mut i = 0;
        while i < self.dim {
            let mut j = 0;
            while j < self.dim {
                let (a, b) = (self.entries[i][j], other.entries[i][j]);
                if a.negative != b.negative || a.index != b.index {
                    return false;
                }
                j += 1;
            }
            i += 1;
        }
        true
    }

    /// A copy with the sign of `eᵢ · eⱼ` flipped. Only useful for checking
    /// that the property suites catch a corrupted table.
    pub fn with_flipped_sign(&self, i: usize, j: usize) -> Self {
        let mut t = *self;
        t.entries[i][j] = t.entries[i][j].negated();
        t
    }

    pub const fn dim(&self) -> usize {
        self.dim
    }

    pub const fn entry(&self, i: usize, j: usize) -> SignedIndex {
        assert!(i < self.dim && j < self.dim);
        self.entries[i][j]
    }

    /// The canonical table for `tag`.
    pub fn for_tag(tag: AlgebraTag) -> &'static StructureTable {
        match tag {
            AlgebraTag::Real => &REAL_TABLE,
            AlgebraTag::Complex => &COMPLEX_TABLE,
            AlgebraTag::Quaternion => &QUATERNION_TABLE,
            AlgebraTag::Octonion => &OCTONION_TABLE,
        }
    }

    /// Bilinear product of coefficient vectors of length `self.dim()`.
    #[inline]
    pub fn product(&self, a: &[f64; 8], b: &[f64; 8]) -> [f64; 8] {
        let mut out = [0.0; 8];
        for (i, &ai) in a.iter().enumerate().take(self.dim) {
            let row = &self.entries[i];
            for j in 0..self.dim {
                let e = row[j];
                let term = ai * b[j];
                if e.negative {
                    out[e.index as usize] -= term;
                } else {
                    out[e.index as usize] += term;
                }
            }
        }
        out
    }
}

const fn conj_sign(i: usize) -> SignedIndex {
    if i == 0 {
        SignedIndex::pos(0)
    } else {
        SignedIndex::neg(i as u8)
    }
}

const fn shifted(s: SignedIndex, by: usize) -> SignedIndex {
    SignedIndex { negative: s.negative, index: s.index + by as u8 }
}

const fn cd_product(i: usize, j: usize, level: u32) -> SignedIndex {
    if level == 0 {
        return SignedIndex::pos(0);
    }
    let half = 1usize << (level - 1);
    let (p, p_hi) = (i & (half - 1), i >= half);
    let (q, q_hi) = (j & (half - 1), j >= half);
    match (p_hi, q_hi) {
        // (p, 0)(q, 0) = (pq, 0)
        (false, false) => cd_product(p, q, level - 1),
        // (p, 0)(0, q) = (0, qp)
        (false, true) => shifted(cd_product(q, p, level - 1), half),
        // (0, p)(q, 0) = (0, p q̄)
        (true, false) => shifted(conj_sign(q).times(cd_product(p, q, level - 1)), half),
        // (0, p)(0, q) = (−q̄ p, 0)
        (true, true) => conj_sign(q).times(cd_product(q, p, level - 1)).negated(),
    }
}

pub static OCTONION_TABLE: StructureTable = StructureTable::from_relations();
pub static QUATERNION_TABLE: StructureTable =
    StructureTable::from_relations().restricted(&QUATERNION_BASIS);
pub static COMPLEX_TABLE: StructureTable =
    StructureTable::from_relations().restricted(&COMPLEX_BASIS);
pub static REAL_TABLE: StructureTable = StructureTable::from_relations().restricted(&[0]);

const _: () = assert!(
    StructureTable::from_relations()
        .const_eq(&StructureTable::cayley_dickson(3).relabeled(&CAYLEY_DICKSON_RELABEL)),
    "cyclic octonion relations disagree with the Cayley-Dickson table"
);
const _: () = assert!(StructureTable::from_relations()
    .restricted(&QUATERNION_BASIS)
    .const_eq(&StructureTable::cayley_dickson(2)));
const _: () = assert!(StructureTable::from_relations()
    .restricted(&COMPLEX_BASIS)
    .const_eq(&StructureTable::cayley_dickson(1)));

/// Every instance of the seven cyclic relations, as `(a, b, ±e_c)` meaning
/// `e_a e_b = ±e_c`. 7 values of `i` times 7 relations.
pub fn octonion_relations() -> [(usize, usize, SignedIndex); 49] {
    let mut out = [(0, 0, SignedIndex::pos(0)); 49];
    let mut n = 0;
    for i in 1..=7 {
        let (a, b, c) = (i, cyc(i + 1), cyc(i + 3));
        let (ai, bi, ci) = (a as u8, b as u8, c as u8);
        for rel in [
            (a, a, SignedIndex::neg(0)),
            (a, b, SignedIndex::pos(ci)),
            (b, a, SignedIndex::neg(ci)),
            (b, c, SignedIndex::pos(ai)),
            (c, b, SignedIndex::neg(ai)),
            (c, a, SignedIndex::pos(bi)),
            (a, c, SignedIndex::neg(bi)),
        ] {
            out[n] = rel;
            n += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_row_is_a_signed_permutation() {
        let t = &OCTONION_TABLE;
        for i in 0..8 {
            let mut seen = [false; 8];
            for j in 0..8 {
                seen[t.entry(i, j).index as usize] = true;
            }
            assert!(seen.iter().all(|&s| s), "row {i} is not a permutation");
        }
    }

    #[test]
    fn relations_are_distinct_and_hold() {
        let rel = octonion_relations();
        for (a, b, c) in rel {
            assert_eq!(OCTONION_TABLE.entry(a, b), c, "e{a} e{b}");
        }
        let mut pairs: Vec<_> = rel.iter().map(|&(a, b, _)| (a, b)).collect();
        pairs.sort();
        pairs.dedup();
        assert_eq!(pairs.len(), 49);
    }

    #[test]
    fn cayley_dickson_matches_after_relabel() {
        let cd = StructureTable::cayley_dickson(3).relabeled(&CAYLEY_DICKSON_RELABEL);
        assert_eq!(cd, OCTONION_TABLE);
        // A relabel that sends l to −e₃ but keeps il, jl, kl must not match.
        let mut bad = CAYLEY_DICKSON_RELABEL;
        bad[4] = SignedIndex::neg(3);
        assert_ne!(StructureTable::cayley_dickson(3).relabeled(&bad), OCTONION_TABLE);
    }

    #[test]
    fn flipped_sign_is_detected_by_comparison() {
        let flipped = OCTONION_TABLE.with_flipped_sign(1, 2);
        assert_ne!(flipped, OCTONION_TABLE);
        assert_eq!(flipped.entry(1, 2), SignedIndex::neg(4));
    }

    #[test]
    fn restrictions_have_expected_dims() {
        assert_eq!(QUATERNION_TABLE.dim(), 4);
        assert_eq!(COMPLEX_TABLE.dim(), 2);
        assert_eq!(REAL_TABLE.dim(), 1);
        // k = ij in the restricted numbering
        assert_eq!(QUATERNION_TABLE.entry(1, 2), SignedIndex::pos(3));
    }
}
