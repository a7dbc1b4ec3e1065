use brauer::BrauerError;
use group_core::GroupError;
use lifting::LiftingError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstantsError {
    #[error("Brauer element is not in the subset with residue {0} along C_f")]
    NotInSubset(String),
    #[error("Brauer element index {0} out of range")]
    UnknownElement(usize),
    #[error("C_f does not generate G; use the unbalanced prediction")]
    UnbalancedInput,
    #[error("subgroup lattice condition fails: {0}")]
    LatticeViolation(String),
    #[error("C_f must be stable under Frobenius and nonempty")]
    BadWeight,
    #[error(transparent)]
    Brauer(#[from] BrauerError),
    #[error(transparent)]
    Lifting(#[from] LiftingError),
    #[error(transparent)]
    Group(#[from] GroupError),
}
