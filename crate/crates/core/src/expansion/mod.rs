//! Expansion certificates: filtrations by horn pushouts, their replay, the
//! closed-form filtrations for prisms, thick simplices and cylinders, and a
//! backtracking search.

mod cert;
mod constructors;
pub mod json;
mod search;
mod verify;

pub use cert::{ExpansionCertificate, ExpansionStep};
pub use constructors::{
    cert_cylinder, cert_horn, cert_prism_horn, cert_prism_horn_tilde, cert_product_with_pair, cert_spine,
    cert_spine_thick, cert_thick_boundary, cert_thick_horn, cert_thick_inner_horn, cert_thickify_expansion,
    cert_thickify_inner, cert_union_of_faces, lambda_batches, lambda_q, mu_q, Side,
};
pub use search::search_expansion;
pub use verify::{verify_certificate, VerifyReport};
