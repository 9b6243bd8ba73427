use thiserror::Error;

use crate::lp::LpError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid criteria matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid simplex point: {0}")]
    InvalidPoint(String),

    #[error("invalid tolerances: {0}")]
    InvalidTolerances(String),

    #[error("invalid support pattern: {0}")]
    InvalidSupport(String),

    #[error("dimension mismatch for {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    /// Indices are 0-based internally; the message reports them 1-based.
    #[error("column index {} out of range 1..={n}", .index + 1)]
    IndexOutOfRange { index: usize, n: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("n = {n} exceeds the enumeration cap of {cap}; pass allow_large_n to override")]
    SizeCap { n: usize, cap: usize },

    #[error("linear program failed: {0}")]
    Lp(#[from] LpError),

    #[error("certificate extracted from {test} does not verify")]
    CertificateRejected { test: String },
}
