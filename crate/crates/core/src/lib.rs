//! Normed division algebras, modified Hopf maps, spin actions and the
//! Stiefel-frame model of closed polygon spaces in ℝ², ℝ³, ℝ⁵ and ℝ⁹.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: ℝ, ℂ, ℍ and 𝕆 as dense coefficient vectors multiplied
//!   through a signed-index structure table.
//! * [`hopf`]: the map `(x, y) ↦ ((|x|² − |y|²)/2, x·ȳ)` into ℝ⊕𝔽, its
//!   closed-form preimages and the unit-element fiber actions.
//! * [`spin`]: SU(2, 𝔽) for the associative algebras, the generator words
//!   `g(r, u)` for 𝕆 and the rotations they induce on ℝ⊕𝔽.
//! * [`polygons`]: frames in V_𝔽(2, k), the polygon map Φᵏ, lifts,
//!   quotient invariants and witness reconstruction.
//! * [`verify`]: seeded property suites for every algebraic identity the
//!   construction depends on.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
mod error;
pub mod hopf;
pub mod linalg;
pub mod polygons;
pub mod random;
pub mod spin;
mod tolerance;
pub mod verify;

pub use algebra::{AlgebraElement, AlgebraTag, SignedIndex, StructureTable};
pub use error::{Error, FrameSum, Result};

pub use hopf::{fiber_act, fiber_witness, hopf_phi, hopf_preimage, HopfImage, Spinor, UnitElement};
pub use linalg::{Matrix, Vector, MAX_DIM};
pub use tolerance::Tolerances;
pub use polygons::{
    equivalent_mod_o, equivalent_mod_so, lift, normalize, phi_k, quotient_invariant,
    rotate_polygon, sample_stiefel, Orientation, PolygonConfig, QuotientInvariant, StiefelFrame,
};
pub use spin::{
    adjoint_rotation, generator_apply, generator_rotation, quaternion_complexify, su2_apply,
    su2_random, word_apply, word_rotation, GeneratorWord, Rotation, SpecialUnitary2,
    SpinGenerator,
};
