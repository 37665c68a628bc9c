use thiserror::Error;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Group(#[from] group_core::GroupError),
    #[error(transparent)]
    Nil(#[from] free_nilpotent::NilError),
    #[error(transparent)]
    Ring(#[from] laurent_cyclotomic::RingError),
    #[error(transparent)]
    Embed(#[from] magnus_embedding::EmbedError),
    #[error("assertion failed: {0}")]
    Assertion(String),
    #[error("bundle invalid: {0}")]
    Bundle(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
