use thiserror::Error;

#[derive(Debug, Error)]
pub enum EmbedError {
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("witness certificate unavailable: {0}")]
    MissingWitness(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Ring(#[from] laurent_cyclotomic::RingError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
