//! Problem instances, the nonlinear-function catalog, residuals and the
//! generators for the standard test problems.

mod generators;
mod instance;
mod nonlinear;

pub use generators::{generate_example_4_1, generate_example_4_2};
pub use instance::{OmegaChoice, VncpInstance};
pub use nonlinear::{NonlinearFn, NonlinearKind};
