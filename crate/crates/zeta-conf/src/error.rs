use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfError {
    #[error("enumeration needs {attempted} states, budget is {budget}")]
    BudgetExceeded { attempted: u128, budget: u128 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("color spec and multidegree disagree: {0}")]
    BadColors(String),
}
