use thiserror::Error;

#[derive(Debug, Error)]
pub enum NilError {
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("element is not group-like: {0}")]
    NotGroupLike(String),
    #[error("non-homogeneous input to a graded operation")]
    NotHomogeneous,
    #[error("relator outside the derived subgroup: {0}")]
    RelatorOutsideGamma2(String),
    #[error("class {0} unsupported here (quotients need class <= 3)")]
    UnsupportedClass(usize),
    #[error("construction invariant failed: {0}")]
    InvariantFailed(String),
    #[error("interpolation inconsistency: {0}")]
    Interpolation(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
