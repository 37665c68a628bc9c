use thiserror::Error;

#[derive(Debug, Error)]
pub enum RingError {
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("not a unit: {0}")]
    NotAUnit(String),
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("{0} is a root of unity")]
    TorsionUnit(String),
    #[error("internal invariant failed: {0}")]
    InternalInvariant(String),
    #[error("certificate check failed: {0}")]
    CertificateInvalid(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
