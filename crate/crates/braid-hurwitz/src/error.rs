use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("braid index {index} out of range for a tuple of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("enumeration needs {attempted} states, budget is {budget}")]
    BudgetExceeded { attempted: u128, budget: u128 },
    #[error("multidegree has {got} entries, expected one per class ({expected})")]
    BadMultidegree { got: usize, expected: usize },
}
