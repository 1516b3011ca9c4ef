//! The five angle measures for a pair of complex vectors, the Hermitian
//! projection, inter-angle identity residuals, and plane classification.
//!
//! All angle computations are scale-invariant: the defining cosines are
//! evaluated as ratios of inner products over norm products, so callers never
//! need to normalize. Singular values (the phase of a vanishing cosine, the
//! Kähler angle of a degenerate plane) come back as an explicit
//! [`AngleValue::Undefined`] variant, never as NaN.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{GeometryError, Result};
use crate::linalg::ComplexVector;
use crate::numeric::{dot_dd, pow2_rescale};

/// Default absolute tolerance on cosine/sine values for definedness and
/// classification decisions. Overridable through the `_with_tol` variants.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Identity residuals involving a tangent or cotangent are recorded only
/// while every such factor stays below this magnitude. Past it, the arccos
/// round-trips behind the angle fields make the residual meaningless: the
/// attainable agreement degrades like `eps * tan^2`, which crosses the 1e-8
/// assertion level right around 1e4.
pub const TRIG_FINITE_BOUND: f64 = 1e3;

/// Why an angle value is undefined for the given inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UndefinedReason {
    /// The complex cosine vanishes, so its phase carries no information.
    RhoZero,
    /// The embedded vectors are parallel and span no 2-plane.
    DegeneratePlane,
}

impl UndefinedReason {
    pub fn as_str(self) -> &'static str {
        match self {
            UndefinedReason::RhoZero => "rho_zero",
            UndefinedReason::DegeneratePlane => "degenerate_plane",
        }
    }
}

/// An angle in radians, or an explicit marker for a singular configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AngleValue {
    Defined(f64),
    Undefined(UndefinedReason),
}

impl AngleValue {
    pub fn value(self) -> Option<f64> {
        match self {
            AngleValue::Defined(x) => Some(x),
            AngleValue::Undefined(_) => None,
        }
    }

    pub fn is_defined(self) -> bool {
        matches!(self, AngleValue::Defined(_))
    }
}

/// Names of the inter-angle identities whose residuals appear in
/// [`AngleReport::residuals`]. A skipped residual is absent from the map.
pub mod residuals {
    /// `cos T_c = cos T + i cos T_K sin T` on unit vectors.
    pub const COSINE_DECOMPOSITION: &str = "cosine_decomposition";
    /// `sin T_H = sin T_K sin T`.
    pub const SINE_PRODUCT: &str = "sine_product";
    /// `cos T = cos T_H cos phi`.
    pub const COSINE_FACTORIZATION: &str = "cosine_factorization";
    /// `sin phi = cot T_K tan T_H`.
    pub const PSEUDO_SINE: &str = "pseudo_sine";
    /// `tan phi = cos T_K tan T`.
    pub const PSEUDO_TANGENT: &str = "pseudo_tangent";
}

/// All five angles for an ordered vector pair plus identity residuals.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleReport {
    /// Euclidean angle of the embedded pair, in [0, pi].
    pub euclidean: f64,
    /// Normalized Hermitian product `(a,b) / (|a| |b|)`.
    pub complex_cosine: Complex64,
    /// Modulus of `complex_cosine`; at most 1 up to rounding.
    pub rho: f64,
    /// Hermitian angle `arccos(rho)`, in [0, pi/2].
    pub hermitian: f64,
    /// Phase of `complex_cosine` in (-pi, pi]; undefined when `rho` vanishes.
    pub pseudo: AngleValue,
    /// Kähler angle in [0, pi]; undefined when the embedded pair is parallel.
    pub kahler: AngleValue,
    /// Identity residuals, keyed by the names in [`residuals`].
    pub residuals: BTreeMap<&'static str, f64>,
}

/// Classification of the oriented real 2-plane spanned by an embedded pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaneTag {
    Holomorphic,
    Antiholomorphic,
    Slant,
}

impl PlaneTag {
    pub fn as_str(self) -> &'static str {
        match self {
            PlaneTag::Holomorphic => "holomorphic",
            PlaneTag::Antiholomorphic => "antiholomorphic",
            PlaneTag::Slant => "slant",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneClass {
    pub tag: PlaneTag,
    /// Oriented Kähler angle of the plane.
    pub kahler_angle: f64,
}

/// Scale-free quantities shared by every angle function.
///
/// Everything is derived from three double-double inner products of the
/// (exactly rescaled) embedded coordinates, so special configurations whose
/// exact cosines are 0 or +-1 survive the arithmetic exactly.
struct PairKernel {
    theta: f64,
    sin_theta: f64,
    complex_cosine: Complex64,
    rho: f64,
    theta_h: f64,
    /// `(JA, B) / (|A| |B| sin T)`, clamped; present whenever `sin T > 0`.
    kahler_cos: Option<f64>,
}

impl PairKernel {
    fn compute(a: &ComplexVector, b: &ComplexVector) -> Result<Self> {
        if a.len() != b.len() {
            return Err(GeometryError::DimensionMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        if a.is_zero() || b.is_zero() {
            return Err(GeometryError::ZeroVector);
        }

        let ea = pow2_rescale(a.embed().entries());
        let eb = pow2_rescale(b.embed().entries());
        let ja = apply_j_slice(&ea);

        let norm_a_sq = dot_dd(&ea, &ea);
        let norm_b_sq = dot_dd(&eb, &eb);
        // (a,b)_C decomposes as (A,B)_R + i (JA,B)_R, so two real dots give
        // the complex cosine's components.
        let re_raw = dot_dd(&ea, &eb);
        let im_raw = dot_dd(&ja, &eb);

        let norm_prod_sq = norm_a_sq.mul(norm_b_sq);
        let norm_prod = norm_prod_sq.sqrt();

        let cos_theta = re_raw.div(norm_prod).value().clamp(-1.0, 1.0);
        let theta = cos_theta.acos();

        let complex_cosine =
            Complex64::new(re_raw.div(norm_prod).value(), im_raw.div(norm_prod).value());
        let rho = re_raw
            .sq()
            .add(im_raw.sq())
            .div(norm_prod_sq)
            .sqrt()
            .value();
        let theta_h = rho.min(1.0).acos();

        // sin^2 T = (|A|^2 |B|^2 - (A,B)^2) / (|A|^2 |B|^2)
        let sin_sq_scaled = norm_prod_sq.sub(re_raw.sq());
        let sin_theta = sin_sq_scaled.div(norm_prod_sq).sqrt().value();
        let kahler_cos = if sin_sq_scaled.value() > 0.0 && sin_theta > 0.0 {
            Some(im_raw.div(sin_sq_scaled.sqrt()).value().clamp(-1.0, 1.0))
        } else {
            None
        };

        Ok(Self {
            theta,
            sin_theta,
            complex_cosine,
            rho,
            theta_h,
            kahler_cos,
        })
    }

    fn pseudo(&self, tol: f64) -> AngleValue {
        if self.rho <= tol {
            AngleValue::Undefined(UndefinedReason::RhoZero)
        } else {
            AngleValue::Defined(principal_arg(self.complex_cosine))
        }
    }

    fn kahler(&self, tol: f64) -> AngleValue {
        if self.sin_theta <= tol {
            return AngleValue::Undefined(UndefinedReason::DegeneratePlane);
        }
        match self.kahler_cos {
            Some(w) => AngleValue::Defined(w.acos()),
            None => AngleValue::Undefined(UndefinedReason::DegeneratePlane),
        }
    }
}

fn apply_j_slice(entries: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(entries.len());
    for pair in entries.chunks_exact(2) {
        out.push(-pair[1]);
        out.push(pair[0]);
    }
    out
}

/// Principal phase in the half-open branch (-pi, pi].
fn principal_arg(z: Complex64) -> f64 {
    let phi = z.im.atan2(z.re);
    if phi <= -PI {
        PI
    } else {
        phi
    }
}

/// Euclidean angle between the embedded images, in [0, pi].
pub fn euclidean_angle(a: &ComplexVector, b: &ComplexVector) -> Result<f64> {
    Ok(PairKernel::compute(a, b)?.theta)
}

/// Cosine of the complex angle: `(a,b) / (|a| |b|)`.
pub fn complex_angle_cosine(a: &ComplexVector, b: &ComplexVector) -> Result<Complex64> {
    Ok(PairKernel::compute(a, b)?.complex_cosine)
}

/// Hermitian angle `arccos |cos T_c|`, in [0, pi/2]. Invariant under
/// independent complex rescaling of either argument.
pub fn hermitian_angle(a: &ComplexVector, b: &ComplexVector) -> Result<f64> {
    Ok(PairKernel::compute(a, b)?.theta_h)
}

/// Phase of the complex cosine in (-pi, pi]; undefined when the cosine
/// modulus is below tolerance.
pub fn pseudo_angle(a: &ComplexVector, b: &ComplexVector) -> Result<AngleValue> {
    pseudo_angle_with_tol(a, b, DEFAULT_TOLERANCE)
}

pub fn pseudo_angle_with_tol(a: &ComplexVector, b: &ComplexVector, tol: f64) -> Result<AngleValue> {
    Ok(PairKernel::compute(a, b)?.pseudo(tol))
}

/// Oriented Kähler angle of the 2-plane spanned by the embedded pair, in
/// [0, pi]; undefined when the embedded vectors are parallel.
pub fn kahler_angle(a: &ComplexVector, b: &ComplexVector) -> Result<AngleValue> {
    kahler_angle_with_tol(a, b, DEFAULT_TOLERANCE)
}

pub fn kahler_angle_with_tol(a: &ComplexVector, b: &ComplexVector, tol: f64) -> Result<AngleValue> {
    Ok(PairKernel::compute(a, b)?.kahler(tol))
}

/// Orientation-blind Kähler angle, folded into [0, pi/2].
pub fn kahler_angle_unoriented(a: &ComplexVector, b: &ComplexVector) -> Result<AngleValue> {
    kahler_angle_unoriented_with_tol(a, b, DEFAULT_TOLERANCE)
}

pub fn kahler_angle_unoriented_with_tol(
    a: &ComplexVector,
    b: &ComplexVector,
    tol: f64,
) -> Result<AngleValue> {
    Ok(match kahler_angle_with_tol(a, b, tol)? {
        AngleValue::Defined(k) => AngleValue::Defined(k.min(PI - k)),
        undefined => undefined,
    })
}

/// Orthogonal projection of `a` onto `b` with respect to the Hermitian
/// product: `sigma b` with `sigma = (b,a) / |b|^2`.
pub fn hermitian_projection(a: &ComplexVector, b: &ComplexVector) -> Result<ComplexVector> {
    if b.is_zero() {
        return Err(GeometryError::ZeroVector);
    }
    let coeff = b.hermitian_inner(a)? / Complex64::new(b.norm().powi(2), 0.0);
    Ok(b.scaled(coeff))
}

/// Full five-angle report with identity residuals.
pub fn angle_report(a: &ComplexVector, b: &ComplexVector) -> Result<AngleReport> {
    angle_report_with_tol(a, b, DEFAULT_TOLERANCE)
}

pub fn angle_report_with_tol(
    a: &ComplexVector,
    b: &ComplexVector,
    tol: f64,
) -> Result<AngleReport> {
    let kernel = PairKernel::compute(a, b)?;
    let pseudo = kernel.pseudo(tol);
    let kahler = kernel.kahler(tol);

    let theta = kernel.theta;
    let theta_h = kernel.theta_h;
    let mut res: BTreeMap<&'static str, f64> = BTreeMap::new();

    if let AngleValue::Defined(theta_k) = kahler {
        let predicted = Complex64::new(theta.cos(), theta_k.cos() * theta.sin());
        res.insert(
            residuals::COSINE_DECOMPOSITION,
            (kernel.complex_cosine - predicted).norm(),
        );
        res.insert(
            residuals::SINE_PRODUCT,
            (theta_h.sin() - theta_k.sin() * theta.sin()).abs(),
        );
    }

    if let AngleValue::Defined(phi) = pseudo {
        res.insert(
            residuals::COSINE_FACTORIZATION,
            (theta.cos() - theta_h.cos() * phi.cos()).abs(),
        );

        if let AngleValue::Defined(theta_k) = kahler {
            let cot_k = 1.0 / theta_k.tan();
            let tan_h = theta_h.tan();
            if cot_k.abs() <= TRIG_FINITE_BOUND && tan_h.abs() <= TRIG_FINITE_BOUND {
                res.insert(residuals::PSEUDO_SINE, (phi.sin() - cot_k * tan_h).abs());
            }

            let tan_phi = phi.tan();
            let tan_theta = theta.tan();
            if tan_phi.abs() <= TRIG_FINITE_BOUND && tan_theta.abs() <= TRIG_FINITE_BOUND {
                res.insert(
                    residuals::PSEUDO_TANGENT,
                    (tan_phi - theta_k.cos() * tan_theta).abs(),
                );
            }
        }
    }

    Ok(AngleReport {
        euclidean: theta,
        complex_cosine: kernel.complex_cosine,
        rho: kernel.rho,
        hermitian: theta_h,
        pseudo,
        kahler,
        residuals: res,
    })
}

/// Classifies the oriented 2-plane spanned by the embedded pair through its
/// Kähler cosine: holomorphic near +-1, antiholomorphic near 0, slant
/// otherwise. `tol` is an absolute tolerance on the cosine.
pub fn classify_plane(a: &ComplexVector, b: &ComplexVector, tol: f64) -> Result<PlaneClass> {
    let kernel = PairKernel::compute(a, b)?;
    let w = match (kernel.sin_theta > tol, kernel.kahler_cos) {
        (true, Some(w)) => w,
        _ => return Err(GeometryError::DegeneratePlane),
    };
    let tag = if w.abs() >= 1.0 - tol {
        PlaneTag::Holomorphic
    } else if w.abs() <= tol {
        PlaneTag::Antiholomorphic
    } else {
        PlaneTag::Slant
    };
    Ok(PlaneClass {
        tag,
        kahler_angle: w.acos(),
    })
}
