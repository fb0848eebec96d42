use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid shape {rows}x{cols} for {len} entries")]
    InvalidShape { rows: usize, cols: usize, len: usize },

    #[error("labels of different modulus: {left} and {right}")]
    ModulusMismatch { left: usize, right: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph has no Weyl-label form; use the gram oracle")]
    LabelsUnavailable,

    #[error("columns are not orthonormal (max deviation {residual:e})")]
    NotIsometry { residual: f64 },

    #[error("eigenvalue solver failed: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
