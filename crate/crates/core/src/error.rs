use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Shapes of the operands are incompatible with the operation.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Matrix side length does not equal the product of the profile dims.
    #[error("profile mismatch: profile {dims:?} has product {expected}, matrix side is {found}")]
    Profile {
        dims: Vec<usize>,
        expected: usize,
        found: usize,
    },

    #[error("block index ({row}, {col}) out of range at level {level} (bound {bound})")]
    Index {
        level: usize,
        row: usize,
        col: usize,
        bound: usize,
    },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// The input lies outside the domain the operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("matrix is not Hermitian: deviation {deviation:e} exceeds tolerance {tolerance:e}")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("threshold scan failed: {0}")]
    Scan(String),
}
