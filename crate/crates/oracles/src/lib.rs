//! Exact counts of cyclic covers of the projective line through Kummer theory.
//!
//! These do not touch braid orbits or Brauer groups, so they serve as an
//! independent check on the predicted constants.

mod error;
mod kummer;

pub use error::OracleError;
pub use kummer::{kummer_brute, kummer_count, kummer_multidegree, quadratic_closed_form};
