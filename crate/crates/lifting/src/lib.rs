//! The lifting-invariant group U(G,C), its kernel A over G and the torsion
//! H₂(G,C), computed from the braid presentation by Reidemeister–Schreier and
//! Smith normal form.

mod data;
mod error;
mod frob;
mod schreier;
mod snf;
mod torsor;

pub use data::{build_lifting_data, build_lifting_data_with, LiftingData, SnfCertificate, UElement};
pub use error::LiftingError;
pub use frob::{frobenius_on_u, FrobeniusOnU};
pub use schreier::SectionOrder;
pub use snf::{smith_normal_form, Snf};
pub use torsor::{
    find_base_tuple, fixed_points_from, fixed_points_from_element, torsor_fixed_count, word_base, FiberCount, FiberStatus,
    TupleSearch,
};
