use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("coordinates sum to {sum}, expected 1 for a weight")]
    NotAWeight { sum: f64 },

    #[error("coordinates sum to {sum}, expected 0 for a hollow vector")]
    NotHollow { sum: f64 },

    #[error("column {column} of weight matrix sums to {sum}, expected 1")]
    ColumnSum { column: usize, sum: f64 },

    #[error("matrix is not symmetric at entry ({row}, {col})")]
    Asymmetric { row: usize, col: usize },

    #[error("diagonal entry {index} of distance matrix is {value}, expected 0")]
    NonHollowDiagonal { index: usize, value: f64 },

    #[error("non-finite value at position {index}")]
    NonFinite { index: usize },

    #[error("empty input")]
    Empty,

    #[error("covector field is not closed")]
    NotClosed,

    #[error("Cayley-Menger matrix is singular (degenerate metric)")]
    SingularCm,
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
