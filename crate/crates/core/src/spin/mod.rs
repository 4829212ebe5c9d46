//! Spin actions on spinors and the rotations they induce on ℝ⊕𝔽.
//!
//! Over ℝ, ℂ, ℍ the group SU(2, 𝔽) acts by matrix multiplication. Over 𝕆
//! the action goes through words in the generators `g(r, u)`.

mod cartan;
mod complexify;
mod generator;
mod rotation;
mod su2;

pub use cartan::{reflection_normals, word_from_rotation};
pub use complexify::{
    mat4_adjoint, mat4_distance, mat4_mul, mat4_trace, quaternion_complexify, split_quaternion,
    ComplexMatrix4,
};
pub use generator::{
    generator_apply, generator_rotation, word_apply, word_rotation, GeneratorWord, SpinGenerator,
};
pub use rotation::Rotation;
pub use su2::{
    adjoint_rotation, mat2_adjoint, mat2_identity, mat2_mul, su2_apply, su2_random,
    su2_random_with, Matrix2, SpecialUnitary2,
};
