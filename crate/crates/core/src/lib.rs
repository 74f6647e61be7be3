//! Exact coincidence testing for tensor-product Bezier surfaces.
//!
//! Geometry is generic over [`Scalar`]; the decision procedures run on exact
//! rationals ([`Rat`]).

pub mod bezier;
pub mod coincidence;
pub mod cross_degree;
pub mod blossom;
pub mod domain;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod generate;
pub mod geom;
pub mod io;
pub mod irreducible;
pub mod same_degree;
pub mod scalar;

pub use bezier::{BezierCurve3, ControlNet, FDSet, NetSymmetry};
pub use error::{Error, Result};
pub use geom::{Point3, Vec3};
pub use scalar::Scalar;

pub type Rat = num_rational::BigRational;
pub type RatVec3 = Vec3<Rat>;
pub type RatNet = ControlNet<Rat>;
pub type F64Net = ControlNet<f64>;
pub type F32Net = ControlNet<f32>;
