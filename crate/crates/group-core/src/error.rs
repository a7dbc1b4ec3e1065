use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("q = {q} is not coprime to |G| = {order}")]
    NonCoprimeOrder { q: u64, order: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("quotient is not abelian")]
    QuotientNotAbelian,
    #[error("weight function is not constant on Frobenius orbits")]
    NotConstantOnOrbits,
    #[error("bad group spec: {0}")]
    BadSpec(String),
}
