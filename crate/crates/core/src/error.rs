use thiserror::Error;

/// Errors raised by the scalar fields, the matrix container and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("zero denominator in rational function")]
    ZeroDenominator,

    #[error("rational function has a pole at x = 0")]
    PoleAtZero,

    /// Size below the minimum of 5 rows.
    #[error("matrix size {n} is too small (n must be at least 5)")]
    TooSmall { n: usize },

    #[error("{what}: expected length {expected}, got {actual}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        actual: usize,
    },

    /// 1-based coordinate of the first entry outside the nearly pentadiagonal pattern.
    #[error("entry ({row}, {col}) lies outside the nearly pentadiagonal pattern")]
    NotNearlyPentadiagonal { row: usize, col: usize },

    #[error("the matrix is not square ({rows} rows, row {row} has {cols} columns)")]
    NotSquare {
        rows: usize,
        row: usize,
        cols: usize,
    },

    /// Pivot `c_i` (1-based) vanished; the method fails.
    #[error("the method fails: zero pivot c_{0}")]
    ZeroPivot(usize),

    #[error("the matrix is singular")]
    SingularMatrix,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
