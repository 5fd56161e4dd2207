use thiserror::Error;

/// Error type shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-range input (bad edge list, bad family parameters, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// An operation that is only defined on connected graphs was given a
    /// disconnected one.
    #[error("metrics require connectivity")]
    Disconnected,

    /// Closeness centrality has a zero transmission denominator on K_1.
    #[error("closeness undefined for a single vertex")]
    SingleVertex,

    /// Exact independence number refused: graph too large for the configured limit.
    #[error("exact alpha limited to n <= {limit}; raise limit explicitly (got n = {n})")]
    AlphaLimit { n: usize, limit: usize },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("report serialization failed: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv write failed: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
