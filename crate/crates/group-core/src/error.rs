use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("invalid multiplication table: {0}")]
    BadTable(String),
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("set is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("group is not nilpotent")]
    NotNilpotent,
    #[error("input rejected: {0}")]
    Rejected(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
