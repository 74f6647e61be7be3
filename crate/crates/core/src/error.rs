use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid control net: {0}")]
    InvalidNet(String),
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("zero reference vector")]
    ZeroVector,
    #[error("rank degeneracy: {0}")]
    RankDegeneracy(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("{operand} surface is not irreducible: {reason}")]
    NotIrreducible { operand: String, reason: String },
    #[error("degenerate window: {0}")]
    DegenerateWindow(String),
    #[error("polygon is not convex")]
    NonConvex,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
