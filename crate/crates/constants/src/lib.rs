//! Leading constants: Euler factors with Brauer phases, regularized products,
//! the factor at ∞, Tauberian extraction and the assembled predictions.

mod error;
mod euler;
mod local;
mod phase;
mod predict;
mod regularize;
mod setting;
mod tauberian;
mod value;

pub use error::ConstantsError;
pub use euler::{absolute_part, euler_factor, euler_factor_on, f_series, f_series_on};
pub use local::{local_points, tau_infinity, unramified_mass, HInf, HeightSpec, LocalPoint, Omega};
pub use phase::PhasePoly;
pub use predict::{
    constant_data, constant_data_unbalanced, predict, predict_unbalanced, ConstantData, PredictionRecord, Term,
    ZERO_TOLERANCE,
};
pub use regularize::{closed_form, regularized_tau, regularized_tau_on, Regularized};
pub use setting::{OrbitData, Setting};
pub use tauberian::{tauberian, Pole, PoleData};
pub use value::Value;
