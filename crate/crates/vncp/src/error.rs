//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum VncpError {
    /// A splitting requires a nonzero diagonal and the matrix has none at `index`.
    #[error("singular splitting: zero or missing diagonal entry at row {index}")]
    SingularSplitting { index: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Matrix Market input could not be parsed; `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The rational nonlinearity t/(1+t) was evaluated at (or within 1e-14 of) t = -1.
    #[error("pole of t/(1+t) hit at component {index}")]
    Pole { index: usize },

    #[error("non-finite value in {context}")]
    NonFinite { context: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Theorem-based step estimate requires the contraction bound to be < 1.
    #[error("infeasible step estimate: |T_gamma|_inf = {t_gamma_inf} >= 1")]
    InfeasibleEstimate { t_gamma_inf: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
