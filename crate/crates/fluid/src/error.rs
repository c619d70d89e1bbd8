use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the solver and volume I/O.
#[derive(Debug, Error)]
pub enum FluidError {
    #[error("dimension mismatch: {context}: expected {expected:?}, got {got:?}")]
    DimensionMismatch {
        context: &'static str,
        expected: (usize, usize, usize),
        got: (usize, usize, usize),
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: not an FVOL file (bad magic)")]
    BadMagic { path: PathBuf },
    #[error("{path}: unsupported FVOL version {version}")]
    BadVersion { path: PathBuf, version: u32 },
    #[error("{path}: header/payload size mismatch")]
    Truncated { path: PathBuf },
    #[error("{path}: metadata error: {source}")]
    Meta {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

impl FluidError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        FluidError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, FluidError>;
