//! Solvers for the vertical nonlinear complementarity problem (VNCP):
//! find `x` with `u(x) = Ax + phi(x) >= 0`, `v(x) = Bx + psi(x) >= 0` and
//! `u(x)^T v(x) = 0`.
//!
//! The crate implements two iteration families over the modulus reformulation
//! `(A + Omega B) x = |(A - Omega B) x + phi(x) - Omega psi(x)| - phi(x) - Omega psi(x)`:
//!
//! - [`solvers::fpi_solve`]: a two-variable fixed-point iteration with a
//!   relaxation weight `tau` on the auxiliary modulus variable (FPI-J /
//!   FPI-GS / FPI-SOR, by the splitting of `A + Omega B`);
//! - [`solvers::nms_solve`]: the one-line modulus-based matrix splitting
//!   baseline (NMJ / NMGS / NMSOR).
//!
//! [`analysis`] provides the convergence constants `(alpha, beta, gamma)`,
//! the admissible `tau` ranges from both convergence theorems, the 2x2
//! error-propagation matrices, and an iteration-count estimate.
//!
//! [`model`] carries problem instances, the component-wise nonlinear function
//! catalog and generators for the standard tridiagonal / block-tridiagonal
//! test problems; [`linalg`] has the CSR matrix type, structural splittings,
//! spectral-norm estimation and Matrix Market I/O.

pub mod analysis;
pub mod error;
pub mod linalg;
pub mod model;
pub mod solvers;

pub use error::VncpError;
pub use linalg::{
    read_matrix_market, solve_with_m, spectral_norm, write_matrix_market, DiagonalMatrix,
    NormEstimate, SparseMatrix, SplittingKind, SplittingPlan,
};
pub use model::{
    generate_example_4_1, generate_example_4_2, NonlinearFn, NonlinearKind, OmegaChoice,
    VncpInstance,
};
pub use solvers::{fpi_solve, fpi_step, nms_solve, FpiState, SolveReport, SolveStatus, SolverConfig};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, VncpError>;
