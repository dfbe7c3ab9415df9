use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid dimension {0}: qudit dimension must be at least 2")]
    InvalidDimension(usize),

    #[error("index ({j}, {k}) out of range for dimension {dim}")]
    IndexOutOfRange { j: usize, k: usize, dim: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not Hermitian (max deviation {0:.3e})")]
    NotHermitian(f64),

    #[error("matrix is not unitary (max deviation {0:.3e})")]
    NotUnitary(f64),

    #[error("radial index p = {0} is not supported; only p = 0 modes are modelled")]
    UnsupportedRadialIndex(u32),

    #[error("numerical accuracy: {0}")]
    NumericalAccuracy(String),

    #[error("no conversion coefficient for l = {l}, m = {m} at zS/zR = {zs}")]
    Coverage { l: i32, m: i32, zs: f64 },

    #[error("degenerate channel: chi = 0 for occupied mode l = {l}")]
    DegenerateChannel { l: i32 },

    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("physical OAM {l} outside encoding range [{lo}, {hi})")]
    OutOfRange { l: i32, lo: i32, hi: i32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
