use std::path::PathBuf;

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid series: {0}")]
    InvalidSeries(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("unsupported granularity: {0}")]
    UnsupportedGranularity(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("injection infeasible: {0}")]
    InjectionInfeasible(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("excluded combination ({rule}): {detail}")]
    Excluded { rule: &'static str, detail: String },

    #[error("archive row {row}: {message}")]
    Archive { row: usize, message: String },

    #[error("manifest line {line}: {message}")]
    ManifestLine { line: usize, message: String },

    #[error("render: {0}")]
    Render(String),

    #[error("missing API key: environment variable {0} is not set")]
    MissingAuth(String),

    #[error("endpoint {endpoint} rejected request with status {status}: {message}")]
    PermanentEndpoint {
        endpoint: String,
        status: u16,
        message: String,
    },

    #[error("endpoint {endpoint} failed after {attempts} attempts: {message}")]
    TransientExhausted {
        endpoint: String,
        attempts: u32,
        message: String,
    },

    #[error("{dataset} sample {index}: {source}")]
    Sample {
        dataset: String,
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("metric input: {0}")]
    MetricInput(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
