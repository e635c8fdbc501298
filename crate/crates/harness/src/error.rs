use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("config: {0}")]
    Config(String),
    #[error("grid point {point}: {reason}")]
    Unrealizable { point: String, reason: String },
    #[error(transparent)]
    Algebra(#[from] neatalg::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
