use group_core::GroupError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LiftingError {
    #[error("presentation too large: {attempted} matrix entries exceeds budget {budget}")]
    BudgetExceeded { attempted: u128, budget: u128 },
    #[error("C does not generate G")]
    NotGenerating,
    #[error("C must be a nonempty union of nontrivial conjugacy classes")]
    BadClassSet,
    #[error("element {0} is not in C")]
    NotInC(usize),
    #[error("input not invariant under Frobenius: {0}")]
    NonInvariantInput(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
