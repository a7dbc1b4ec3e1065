use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("Z/{n} covers need {n} | q − 1 (q = {q})")]
    InvalidKummer { n: u64, q: u64 },
    #[error("enumeration of {attempted} items exceeds budget {budget}")]
    BudgetExceeded { attempted: u128, budget: u128 },
    #[error("weight vector must have one positive entry per element of Z/{0}")]
    BadWeight(u64),
    #[error(transparent)]
    Conf(#[from] zeta_conf::ConfError),
}
