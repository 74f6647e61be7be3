//! Exact linear algebra and polynomial root finding over the rationals.

pub mod matrix;
pub mod poly;
pub mod roots;

pub use matrix::{LinearSolveOutcome, Matrix};
pub use poly::Poly;
pub use roots::{count_real_roots, isolate_real_roots, rational_roots, RootLocation};
