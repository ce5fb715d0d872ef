use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] hdecomp_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}:{line}: {reason}", path.display())]
    Format { path: PathBuf, line: usize, reason: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub(crate) fn format(path: impl Into<PathBuf>, line: usize, reason: impl Into<String>) -> Self {
        Error::Format { path: path.into(), line, reason: reason.into() }
    }

    /// 1 for domain and input errors, 2 for usage errors, 3 when a cap or
    /// budget was hit.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Core(hdecomp_core::Error::Size { .. } | hdecomp_core::Error::Budget { .. }) => 3,
            Error::Usage(_) => 2,
            _ => 1,
        }
    }
}
