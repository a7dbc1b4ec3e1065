//! Braid-group orbits on tuples of group elements: the components of Hurwitz
//! spaces over an algebraically closed field.

mod budget;
mod error;
mod moves;
mod orbits;
mod scan;

pub use budget::{default_budget, DEFAULT_BUDGET};
pub use error::BraidError;
pub use moves::{braid_move, Direction};
pub use orbits::{admissible_tuple_count, multidegree, orbit_enumerate, OrbitCatalog, OrbitInfo};
pub use scan::{stabilization_scan, ScanReport, ScanRow};
