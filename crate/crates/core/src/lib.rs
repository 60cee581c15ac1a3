//! Exact computations with finite simplicial sets, horn-filling
//! certificates, simplicial objects in finite sets, and Maurer–Cartan
//! nerves of rational differential graded algebras.

pub mod budget;
pub mod dga;
pub mod error;
pub mod expansion;
pub mod nerve;
pub mod set_model;
pub mod simplicial;

pub use error::{Error, Result};
