//! Control nets, curves, finite differences and grid symmetries.

pub mod curve;
pub mod differences;
pub mod monomial;
pub mod net;
pub mod symmetry;

pub use curve::BezierCurve3;
pub use differences::{boundary_differences, finite_differences, BoundaryFD, FDSet};
pub use monomial::MonomialForm;
pub use net::ControlNet;
pub use symmetry::{nets_equal_up_to_symmetry, NetSymmetry};
