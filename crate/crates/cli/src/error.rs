use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed TOML; the message carries line and column.
    #[error("parse error: {0}")]
    Parse(String),
    #[error("input error at `{field}`: {message}")]
    Input { field: String, message: String },
    /// A structural check on the input failed, e.g. an axiom.
    #[error("`{task}` failed on the input: {message}")]
    Rejected { task: String, message: String },
    /// The engine raised an error while running a task.
    #[error("`{task}` aborted: {message}")]
    Aborted { task: String, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    /// 2 for anything wrong with the input, 1 for an engine failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Aborted { .. } => 1,
            _ => 2,
        }
    }
}
