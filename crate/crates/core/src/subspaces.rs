//! Oriented 2-planes of the real space underlying C^n: orthonormalization,
//! stationary (principal) angles, isocliny tests, J-images, and holomorphic
//! plane construction.
//!
//! Orientation is carried by the ordered spanning pair. Only the Kähler
//! angle is orientation-sensitive; principal angles and isocliny verdicts
//! fold to [0, pi/2].

use std::f64::consts::FRAC_PI_2;

use crate::error::{GeometryError, Result};
use crate::linalg::{ComplexVector, RealVector};
use crate::numeric::pow2_rescale;

/// The two stationary angles of a pair of 2-planes, sorted ascending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrincipalAngles {
    pub alpha_min: f64,
    pub alpha_max: f64,
}

/// Isocliny verdict for a pair of 2-planes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsoclinyResult {
    pub isoclinic: bool,
    /// Midpoint of the two stationary angles; the isocliny angle when
    /// `isoclinic` holds.
    pub angle: f64,
}

/// Oriented 2-plane given by an ordered orthonormal spanning pair in an
/// even-dimensional real space.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoPlane {
    span_u: RealVector,
    span_v: RealVector,
}

impl TwoPlane {
    /// Orientation-preserving orthonormalization of a spanning pair:
    /// `span_u` points along `a`, `span_v` along the component of `b`
    /// orthogonal to `a`.
    pub fn from_spanning_pair(a: &RealVector, b: &RealVector) -> Result<Self> {
        Self::from_spanning_pair_with_tol(a, b, crate::angles::DEFAULT_TOLERANCE)
    }

    /// As [`TwoPlane::from_spanning_pair`], treating the pair as degenerate
    /// when the sine of its angle is at most `tol`.
    pub fn from_spanning_pair_with_tol(a: &RealVector, b: &RealVector, tol: f64) -> Result<Self> {
        if a.len() != b.len() {
            return Err(GeometryError::DimensionMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        if !a.len().is_multiple_of(2) {
            return Err(GeometryError::OddLength { len: a.len() });
        }
        if a.is_zero() || b.is_zero() {
            return Err(GeometryError::ZeroVector);
        }
        let a = RealVector::new(pow2_rescale(a.entries()))?;
        let b = RealVector::new(pow2_rescale(b.entries()))?;
        let u = a.normalized()?;

        let mut w = b.sub(&u.scaled(b.dot(&u)?))?;
        if w.norm() <= tol * b.norm() {
            return Err(GeometryError::DegeneratePlane);
        }
        // second orthogonalization pass keeps |u.v| at rounding level even
        // for nearly parallel input pairs
        w = w.sub(&u.scaled(w.dot(&u)?))?;
        let v = w.normalized()?;
        Ok(Self {
            span_u: u,
            span_v: v,
        })
    }

    /// Wraps an already orthonormal ordered pair, validating unit norms and
    /// orthogonality at 1e-12.
    pub fn from_orthonormal(u: RealVector, v: RealVector) -> Result<Self> {
        if u.len() != v.len() {
            return Err(GeometryError::DimensionMismatch {
                left: u.len(),
                right: v.len(),
            });
        }
        if !u.len().is_multiple_of(2) {
            return Err(GeometryError::OddLength { len: u.len() });
        }
        if (u.norm() - 1.0).abs() > 1e-12
            || (v.norm() - 1.0).abs() > 1e-12
            || u.dot(&v)?.abs() > 1e-12
        {
            return Err(GeometryError::DegeneratePlane);
        }
        Ok(Self {
            span_u: u,
            span_v: v,
        })
    }

    /// The holomorphic plane of a complex vector: spanned by the embedded
    /// direction and its J-image.
    pub fn holomorphic(a: &ComplexVector) -> Result<Self> {
        if a.is_zero() {
            return Err(GeometryError::ZeroVector);
        }
        let u = RealVector::new(pow2_rescale(a.embed().entries()))?.normalized()?;
        let v = u.apply_j()?;
        Ok(Self {
            span_u: u,
            span_v: v,
        })
    }

    pub fn span_u(&self) -> &RealVector {
        &self.span_u
    }

    pub fn span_v(&self) -> &RealVector {
        &self.span_v
    }

    pub fn ambient_dim(&self) -> usize {
        self.span_u.len()
    }

    /// Oriented plane with the reversed orientation.
    pub fn reversed(&self) -> Self {
        Self {
            span_u: self.span_v.clone(),
            span_v: self.span_u.clone(),
        }
    }

    /// Image plane under the complex structure; J is orthogonal, so the
    /// spanning pair stays orthonormal.
    pub fn j_image(&self) -> Self {
        Self {
            span_u: self.span_u.apply_j().expect("plane dimension is even"),
            span_v: self.span_v.apply_j().expect("plane dimension is even"),
        }
    }

    /// Kähler angle of the oriented plane, `arccos((J u, v))`, in [0, pi].
    /// Independent of the orientation-preserving spanning pair choice.
    pub fn kahler_angle(&self) -> f64 {
        let ju = self.span_u.apply_j().expect("plane dimension is even");
        let cos = ju.dot(&self.span_v).expect("spanning pair lengths match");
        cos.clamp(-1.0, 1.0).acos()
    }

    /// Orthogonal projection of a vector onto the plane.
    pub fn project(&self, x: &RealVector) -> Result<RealVector> {
        let cu = x.dot(&self.span_u)?;
        let cv = x.dot(&self.span_v)?;
        self.span_u.scaled(cu).add(&self.span_v.scaled(cv))
    }

    /// Stationary angles via the singular values of the 2x2 matrix of inner
    /// products between the orthonormal bases; each angle lies in [0, pi/2].
    pub fn principal_angles(&self, other: &Self) -> Result<PrincipalAngles> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(GeometryError::DimensionMismatch {
                left: self.ambient_dim(),
                right: other.ambient_dim(),
            });
        }
        let m00 = self.span_u.dot(&other.span_u)?;
        let m01 = self.span_u.dot(&other.span_v)?;
        let m10 = self.span_v.dot(&other.span_u)?;
        let m11 = self.span_v.dot(&other.span_v)?;

        // closed-form singular values of [[m00, m01], [m10, m11]]
        let e = 0.5 * (m00 + m11);
        let f = 0.5 * (m00 - m11);
        let g = 0.5 * (m10 + m01);
        let h = 0.5 * (m10 - m01);
        let q = e.hypot(h);
        let r = f.hypot(g);
        let sigma_large = q + r;
        let sigma_small = (q - r).abs();

        Ok(PrincipalAngles {
            alpha_min: sigma_large.clamp(0.0, 1.0).acos(),
            alpha_max: sigma_small.clamp(0.0, 1.0).acos(),
        })
    }

    /// Isoclinic iff the stationary angles agree within `tol`.
    pub fn is_isoclinic(&self, other: &Self, tol: f64) -> Result<IsoclinyResult> {
        let pa = self.principal_angles(other)?;
        Ok(IsoclinyResult {
            isoclinic: pa.alpha_max - pa.alpha_min <= tol,
            angle: 0.5 * (pa.alpha_min + pa.alpha_max),
        })
    }

    /// Brute-force realization of the stationary angles: sweeps `grid`
    /// directions of this plane and measures the angle each one encloses
    /// with its orthogonal projection onto `other` (pi/2 when the projection
    /// vanishes). Serves as the independent oracle for
    /// [`TwoPlane::principal_angles`].
    pub fn stationary_angles_scan(&self, other: &Self, grid: usize) -> Result<PrincipalAngles> {
        if grid < 2 {
            return Err(GeometryError::GridTooSmall { got: grid });
        }
        if self.ambient_dim() != other.ambient_dim() {
            return Err(GeometryError::DimensionMismatch {
                left: self.ambient_dim(),
                right: other.ambient_dim(),
            });
        }
        let u = self.span_u.entries();
        let v = self.span_v.entries();
        let qu = other.span_u.entries();
        let qv = other.span_v.entries();
        let dim = u.len();

        let mut lo = FRAC_PI_2;
        let mut hi = 0.0f64;
        let mut direction = vec![0.0; dim];
        for i in 0..grid {
            let t = std::f64::consts::PI * (i as f64) / (grid as f64);
            let (ct, st) = (t.cos(), t.sin());
            for k in 0..dim {
                direction[k] = ct * u[k] + st * v[k];
            }
            let cu: f64 = direction.iter().zip(qu).map(|(x, y)| x * y).sum();
            let cv: f64 = direction.iter().zip(qv).map(|(x, y)| x * y).sum();
            let proj_norm = cu.hypot(cv);
            let alpha = if proj_norm <= 1e-14 {
                FRAC_PI_2
            } else {
                // angle between the direction and its in-plane projection,
                // from the orthogonal split X = proj + perp
                let mut perp_sq = 0.0;
                for k in 0..dim {
                    let p = cu * qu[k] + cv * qv[k];
                    let d = direction[k] - p;
                    perp_sq += d * d;
                }
                perp_sq.sqrt().atan2(proj_norm)
            };
            lo = lo.min(alpha);
            hi = hi.max(alpha);
        }
        Ok(PrincipalAngles {
            alpha_min: lo,
            alpha_max: hi,
        })
    }
}
