//! Exact rational differential graded algebras, normalized cochain
//! algebras and the Maurer–Cartan calculus.

mod algebra;
mod cochain;
pub mod json;
pub mod linalg;
mod mc;
pub mod rational;
#[cfg(test)]
mod tests;

pub use algebra::{dual_numbers, endomorphism_algebra, ground_field, matrix_algebra, Complex, DGAlgebra, Element, SparseVec};
pub use cochain::{cochain_dga, tensor_dga, CochainAlgebra, CochainShape};
pub use mc::{check_edge, check_quasi_inverse, is_mc, mc_residual, quasi_invertible_solve, twisted_diff, QuasiInverse, TwistedDifferential};
pub use rational::Q;
