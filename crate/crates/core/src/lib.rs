//! Angle measures between vectors, complex lines, and 2-planes of complex
//! vector spaces.
//!
//! A pair of complex vectors carries five related angle notions: the
//! Euclidean angle of their real images, the complex-valued angle cosine of
//! the Hermitian product, the Hermitian angle between their complex lines,
//! the pseudo-angle (the phase of the complex cosine), and the Kähler angle
//! of the real 2-plane they span. This crate computes all five together with
//! the identities linking them, plus stationary/principal angles and
//! isocliny tests between 2-planes of the underlying real space.

pub mod angles;
pub mod error;
pub mod linalg;
mod numeric;
pub mod subspaces;

pub use angles::{
    angle_report, angle_report_with_tol, classify_plane, complex_angle_cosine, euclidean_angle,
    hermitian_angle, hermitian_projection, kahler_angle, kahler_angle_unoriented,
    kahler_angle_with_tol, pseudo_angle, pseudo_angle_with_tol, AngleReport, AngleValue,
    PlaneClass, PlaneTag, UndefinedReason, DEFAULT_TOLERANCE,
};
pub use error::{GeometryError, Result};
pub use linalg::{ComplexVector, RealVector};
pub use num_complex::Complex64;
pub use subspaces::{IsoclinyResult, PrincipalAngles, TwoPlane};
