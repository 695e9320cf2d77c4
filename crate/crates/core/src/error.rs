//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("image error on {path}: {reason}")]
    Image { path: String, reason: String },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("empty strip mask for {height}x{width} (fractions {inner}..{outer})")]
    EmptyStripMask {
        height: usize,
        width: usize,
        inner: f64,
        outer: f64,
    },

    #[error("histogram binning mismatch")]
    HistogramMismatch,

    #[error("zero-energy spectrum")]
    ZeroEnergy,

    #[error("all values tied; rank correlation undefined")]
    AllTied,

    #[error("zero standard deviation; normalization undefined")]
    ZeroStd,

    #[error("non-finite loss at iteration {iteration}: {value}")]
    NonFiniteLoss { iteration: usize, value: f64 },

    #[error("insufficient data: {0}")]
    InsufficientData(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
