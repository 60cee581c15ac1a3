//! Simplicial objects in finite sets, where covers are the surjections:
//! mapping spaces, relative mapping spaces, and the horn-filling,
//! hypercover and weak-equivalence conditions.

mod category;
mod checks;
mod core;
pub mod json;
mod mapspace;
mod morphism;
mod object;
mod path;

pub use self::core::{g_core, gg_cotensor, gg_core, gg_counit, quasi_invertible_edges, CoreMethod};
pub use category::FiniteCategory;
pub use checks::{
    check_fibration, check_hypercover, check_k_category, check_k_groupoid, check_quasi_fibration, check_we_cat,
    check_we_direct, check_we_path, compare, CaseVerdict, ConditionReport, Pair,
};
pub use mapspace::{
    enumerate_extensions, enumerate_maps, maps_on, pull_back, push_forward, relative_maps, required_dim, restrict,
    Assignment, ABSENT,
};
pub use morphism::{pullback, sub_object, Morphism};
pub use object::{TruncatedSimplicialObject, Tso};
pub use path::{
    brown_factorization, codegeneracy_vertices, coface_vertices, path_space, thick_power, BrownFactorization, Cotensor,
    ProductCotensor,
};

#[cfg(test)]
mod tests;
