use std::path::PathBuf;

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: invalid JSON: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error("serialization failed: {0}")]
    Serialize(#[from] serde_json::Error),
    #[error("{0}")]
    Format(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] polyhopf::Error),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    /// 2 for usage errors, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}
