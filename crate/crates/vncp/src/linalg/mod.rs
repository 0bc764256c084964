//! Sparse matrix storage, structural splittings, norm estimation and
//! Matrix Market I/O.

mod market;
mod norms;
mod sparse;
mod splitting;

pub use market::{read_matrix_market, write_matrix_market};
pub use norms::{inv_norm_of_m, spectral_norm, NormEstimate};
pub use sparse::{DiagonalMatrix, SparseMatrix};
pub use splitting::{solve_with_m, split, SplittingKind, SplittingPlan};

/// Euclidean norm of a vector.
pub fn norm2(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Component-wise absolute value, written into `out`.
pub fn abs_into(x: &[f64], out: &mut [f64]) {
    for (o, v) in out.iter_mut().zip(x) {
        *o = v.abs();
    }
}
