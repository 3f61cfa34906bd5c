use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("malformed {what}: {detail}")]
    Malformed { what: &'static str, detail: String },
    #[error("cache schema `{found}` is not `{expected}`")]
    Schema { found: String, expected: &'static str },
    #[error("cache entry f({n},{k}) disagrees with the recurrence")]
    StaleCache { n: u32, k: u32 },
    #[error("cannot parse `{input}` at byte {pos}: {msg}")]
    Notation { input: String, pos: usize, msg: String },
    #[error(transparent)]
    Core(#[from] qballot_core::Error),
}

impl FormatError {
    pub(crate) fn malformed(what: &'static str, detail: impl Into<String>) -> Self {
        FormatError::Malformed { what, detail: detail.into() }
    }
}

pub type Result<T, E = FormatError> = std::result::Result<T, E>;
