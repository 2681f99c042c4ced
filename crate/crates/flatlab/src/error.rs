use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error(transparent)]
    Core(#[from] flatlab_core::Error),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Certificate(String),
}

impl CliError {
    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Syntax { .. } => "syntax",
            CliError::Core(e) => e.kind(),
            CliError::Io(_) => "io",
            CliError::Certificate(_) => "certificate",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "kind": self.kind(), "message": self.to_string() })
    }
}
