use lifting::LiftingError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BrauerError {
    #[error("class {0} is not contained in C")]
    ClassOutsideC(usize),
    #[error("γ = {0} is not fixed by Frobenius")]
    GammaNotFixed(usize),
    #[error("lift has image {got}, expected {expected}")]
    BadLift { got: usize, expected: usize },
    #[error("multidegree not Frobenius invariant")]
    NonInvariantMultidegree,
    #[error(transparent)]
    Lifting(#[from] LiftingError),
}
