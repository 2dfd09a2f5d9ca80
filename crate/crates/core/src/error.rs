use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-range input (vertex ids, family parameters, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// A configured resource budget was exceeded.
    #[error("capacity exceeded: {what} ({count} > {limit})")]
    Capacity {
        what: &'static str,
        count: usize,
        limit: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}
