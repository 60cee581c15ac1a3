//! Finite and truncated simplicial sets stored as nondegenerate cells with
//! faces in Eilenberg–Zilber normal form.

mod attach;
mod build;
mod construct;
mod join;
pub mod json;
mod maps;
mod product;
mod simplex;
mod sset;
mod subcomplex;
mod thick;

pub use attach::{pushout_attach, Attached};
pub use construct::{
    boundary, horn, increasing_mask, letter_mask, spine, spine_partial, standard_simplex, thick_boundary,
    thick_horn, thick_of_simplicial_subset, thick_simplex, union_of_faces,
};
pub use join::{join, join_with_keys, JoinKey, JoinSet};
pub use maps::{image_of, SimplicialMap};
pub use product::{product, product_with_pairs, shuffle_grade, Prism, ProductSet};
pub use simplex::{
    codegeneracy_word, coface_word, degens_of_word, is_monotone, reduce_word, surjection_from_degens, SimplexRef,
};
pub use sset::{binomial, Cell, CellId, FiniteSimplicialSet};
pub use subcomplex::{skeleton, Inclusion, Mask};
pub use thick::{thickify, thickify_with_keys, ThickKey, ThickSet};
