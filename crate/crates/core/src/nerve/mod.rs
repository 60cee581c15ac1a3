//! The Maurer–Cartan nerve of a differential graded algebra at rational
//! points: simplices, horn fillers, the 2×2 matrix model of the thick
//! interval, quasi-inverse lifting and the smoothness identities.

mod bridge;
pub mod json;
mod lift;
mod matrix;
mod point;
pub mod sample;
#[cfg(test)]
mod tests;

pub use bridge::{nerve_as_simplicial_object, sampled_horn_fills, HornFillReport, NerveSample};
pub use lift::{catalan, catalan_lift, catalan_series, BetaSource, smoothness_identities, CatalanLift, EdgeWithQuasiInverse, IdentityCheck, SmoothnessReport};
pub use matrix::{delta_check, psi, psi_inverse, Matrix2U, UAlgebra};
pub use point::{
    degeneracy, face, filler_space, inner_horn_fill, nerve_check, operator_action, residual, tuples, FillerSpace, NerveCheck,
    NervePoint,
};
