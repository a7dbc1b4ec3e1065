//! Point counts of configuration spaces of colored points on the affine line
//! over a finite field, with the exact series arithmetic they need.

mod conf;
mod cyclo;
mod error;
mod ffield;
mod points;
mod series;

pub use conf::{brute_conf, conf_bound_check, conf_count, conf_series, ColorSpec, ConfBound};
pub use cyclo::{cyclotomic_poly, Cyclo};
pub use error::ConfError;
pub use ffield::{Poly, SmallField};
pub use points::{closed_points, euler_partial_a1, moebius, zeta_a1};
pub use series::{Ring, Series};
