//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("algebra has no unity: {0}")]
    UnityRequired(String),

    #[error("coalgebra has no counit: {0}")]
    CounitRequired(String),

    #[error("Jordan identity fails on witness {witness}")]
    NotJordan { witness: String },

    #[error("Jacobi/alternation fails on witness {witness}")]
    NotLie { witness: String },

    #[error("subspace is not a subalgebra: {0}")]
    NotSubalgebra(String),

    #[error("subspace is not an ideal: {0}")]
    NotIdeal(String),

    #[error("subspace is not a subcoalgebra: {0}")]
    NotSubcoalgebra(String),

    #[error("subspace is not a coideal: {0}")]
    NotCoideal(String),

    #[error("element does not decompose over the expected operator span: {0}")]
    DecompositionFailed(String),

    #[error("pairing matrix is degenerate: {0}")]
    DegenerateGram(String),

    #[error("unknown zoo algebra: {0}")]
    UnknownZoo(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
