use crate::graph6::Graph6Error;

/// Failures surfaced by the command line, each mapped to an exit code.
#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("input error: {0}")]
    Input(String),
    #[error("guard exceeded: {0}")]
    Guard(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Input(_) | AppError::Io(_) => 2,
            AppError::Guard(_) => 3,
            AppError::Consistency(_) => 4,
        }
    }
}

impl From<Graph6Error> for AppError {
    fn from(e: Graph6Error) -> Self {
        AppError::Input(e.to_string())
    }
}

impl From<ctrlgraph_core::Error> for AppError {
    fn from(e: ctrlgraph_core::Error) -> Self {
        use ctrlgraph_core::Error as E;
        match e {
            E::Inconsistency(msg) => AppError::Consistency(msg),
            E::TooLarge { .. } => AppError::Guard(e.to_string()),
            other => AppError::Input(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for AppError {
    fn from(e: serde_json::Error) -> Self {
        AppError::Input(e.to_string())
    }
}

impl From<csv::Error> for AppError {
    fn from(e: csv::Error) -> Self {
        AppError::Io(std::io::Error::other(e))
    }
}

pub type AppResult<T> = Result<T, AppError>;
