//! Frames in V_𝔽(2, k) and the closed unit-perimeter polygons they map to.

mod config;
mod frame;
mod lift;
mod quotient;
mod witness;

pub use config::{normalize, rotate_polygon, PolygonConfig};
pub use frame::{
    fiber_act_frame, frame_residuals, sample_stiefel, sample_stiefel_with, su2_apply_frame,
    word_apply_frame, StiefelFrame,
};
pub use lift::{lift, phi_k, sample_frame, sample_polygon};
pub use quotient::{
    equivalent_mod_o, equivalent_mod_so, independent_edges, quotient_invariant, Orientation,
    QuotientInvariant, RANK_TOL,
};
pub use witness::{aligning_rotation, witness_chain, GroupWitness, WitnessChain};
