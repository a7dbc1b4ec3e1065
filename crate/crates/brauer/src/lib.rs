//! Unramified-away-from-C Brauer classes of `BG` over a finite field, in the
//! `(α, ψ)` model built on `U(G,C)`, with residues and the obstruction test.

mod error;
mod group;
mod linalg;
mod residue;
mod restrict;

pub use error::BrauerError;
pub use group::{enumerate_brauer, pairing_is_perfect, BrauerElement, BrauerGroup};
pub use residue::{BrSubsets, ResidueValue};
