use thiserror::Error;

/// Errors raised by vector/plane constructors and the angle operations.
///
/// Mathematical singularities that are part of a value's domain (the phase of
/// a zero cosine, the Kähler angle of a degenerate plane) are *not* errors;
/// they are reported through [`crate::angles::AngleValue::Undefined`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("vector must have at least one entry")]
    EmptyVector,
    #[error("entry {index} is not finite")]
    NonFiniteEntry { index: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("length {len} is odd; the complex structure needs an even number of coordinates")]
    OddLength { len: usize },
    #[error("zero vector has no direction")]
    ZeroVector,
    #[error("spanning pair is degenerate (zero or parallel vectors)")]
    DegeneratePlane,
    #[error("direction grid must have at least 2 samples, got {got}")]
    GridTooSmall { got: usize },
}

pub type Result<T> = std::result::Result<T, GeometryError>;
