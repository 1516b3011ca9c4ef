//! Command execution: resolves names and options against the input
//! document, runs the core operations, and assembles report documents.
//!
//! Exit-code contract: 0 success, 2 usage/input error, 3 mathematical
//! degeneracy (zero vectors, degenerate spanning pairs).

use std::f64::consts::PI;

use hermangle_core::{
    angle_report_with_tol, classify_plane, AngleValue, ComplexVector, GeometryError, RealVector,
    TwoPlane, DEFAULT_TOLERANCE,
};

use crate::doc::{
    AngleUnit, AnglesDocument, ComplexValue, InputDocument, MaybeAngle, PlaneClassDoc,
    SubspaceDocument, SCHEMA_VERSION,
};

#[derive(Debug)]
pub enum CliError {
    /// Unusable input: bad document, unknown name, shape mismatch. Exit 2.
    Usage(String),
    /// Mathematically degenerate input: zero vector, degenerate plane. Exit 3.
    Degenerate(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Degenerate(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Degenerate(m) => m,
        }
    }
}

fn core_error(context: &str, err: GeometryError) -> CliError {
    match err {
        GeometryError::ZeroVector | GeometryError::DegeneratePlane => {
            CliError::Degenerate(format!("{context}: {err}"))
        }
        other => CliError::Usage(format!("{context}: {other}")),
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Resolved {
    pub unit: AngleUnit,
    pub tolerance: f64,
}

/// Command-line flags win over document options, which win over defaults.
pub fn resolve_options(
    doc: &InputDocument,
    degrees_flag: bool,
    tol_flag: Option<f64>,
) -> Result<Resolved, CliError> {
    let unit = if degrees_flag {
        AngleUnit::Degrees
    } else {
        doc.options.angle_unit.unwrap_or(AngleUnit::Radians)
    };
    let tolerance = tol_flag
        .or(doc.options.tolerance)
        .unwrap_or(DEFAULT_TOLERANCE);
    if !tolerance.is_finite() || tolerance <= 0.0 || tolerance >= 1.0 {
        return Err(CliError::Usage(format!(
            "tolerance must lie in (0, 1), got {tolerance}"
        )));
    }
    Ok(Resolved { unit, tolerance })
}

fn convert(angle: f64, unit: AngleUnit) -> f64 {
    match unit {
        AngleUnit::Radians => angle,
        AngleUnit::Degrees => angle.to_degrees(),
    }
}

fn maybe_angle(value: AngleValue, unit: AngleUnit, fold: bool) -> MaybeAngle {
    match value {
        AngleValue::Defined(x) => {
            let x = if fold { x.min(PI - x) } else { x };
            MaybeAngle::defined(convert(x, unit))
        }
        AngleValue::Undefined(reason) => MaybeAngle::undefined(reason.as_str()),
    }
}

fn lookup_vector(doc: &InputDocument, name: &str) -> Result<ComplexVector, CliError> {
    let pairs = doc
        .vectors
        .get(name)
        .ok_or_else(|| CliError::Usage(format!("unknown vector name '{name}'")))?;
    let pairs: Vec<(f64, f64)> = pairs.iter().map(|[re, im]| (*re, *im)).collect();
    ComplexVector::from_pairs(&pairs).map_err(|e| core_error(&format!("vector '{name}'"), e))
}

fn lookup_plane(doc: &InputDocument, name: &str, tol: f64) -> Result<TwoPlane, CliError> {
    let [a, b] = doc
        .planes
        .get(name)
        .ok_or_else(|| CliError::Usage(format!("unknown plane name '{name}'")))?;
    let context = format!("plane '{name}'");
    let a = RealVector::new(a.clone()).map_err(|e| core_error(&context, e))?;
    let b = RealVector::new(b.clone()).map_err(|e| core_error(&context, e))?;
    TwoPlane::from_spanning_pair_with_tol(&a, &b, tol).map_err(|e| core_error(&context, e))
}

/// Splits a `--pair a,b` / `--planes p,q` argument into exactly two names.
pub fn split_pair(arg: &str) -> Result<(&str, &str), CliError> {
    match arg.split_once(',') {
        Some((left, right)) if !left.is_empty() && !right.is_empty() && !right.contains(',') => {
            Ok((left, right))
        }
        _ => Err(CliError::Usage(format!(
            "expected exactly two comma-separated names, got '{arg}'"
        ))),
    }
}

pub fn cmd_angles(
    doc: &InputDocument,
    pair: &str,
    degrees: bool,
    tol: Option<f64>,
    unoriented: bool,
) -> Result<AnglesDocument, CliError> {
    let resolved = resolve_options(doc, degrees, tol)?;
    let (name_a, name_b) = split_pair(pair)?;
    let a = lookup_vector(doc, name_a)?;
    let b = lookup_vector(doc, name_b)?;
    if a.len() != b.len() {
        return Err(CliError::Usage(format!(
            "vectors '{name_a}' and '{name_b}' have different dimensions ({} vs {})",
            a.len(),
            b.len()
        )));
    }

    let report = angle_report_with_tol(&a, &b, resolved.tolerance)
        .map_err(|e| core_error(&format!("pair '{name_a},{name_b}'"), e))?;

    let plane_class = match classify_plane(&a, &b, resolved.tolerance) {
        Ok(class) => {
            let k = if unoriented {
                class.kahler_angle.min(PI - class.kahler_angle)
            } else {
                class.kahler_angle
            };
            PlaneClassDoc {
                tag: Some(class.tag.as_str()),
                kahler_angle: Some(convert(k, resolved.unit)),
                reason: None,
            }
        }
        Err(GeometryError::DegeneratePlane) => PlaneClassDoc {
            tag: None,
            kahler_angle: None,
            reason: Some("degenerate_plane"),
        },
        Err(e) => return Err(core_error("plane classification", e)),
    };

    Ok(AnglesDocument {
        schema_version: SCHEMA_VERSION,
        command: "angles",
        pair: [name_a.to_owned(), name_b.to_owned()],
        unit: resolved.unit.as_str(),
        tolerance: resolved.tolerance,
        unoriented,
        euclidean: convert(report.euclidean, resolved.unit),
        complex_cosine: ComplexValue {
            re: report.complex_cosine.re,
            im: report.complex_cosine.im,
        },
        rho: report.rho,
        hermitian: convert(report.hermitian, resolved.unit),
        pseudo: maybe_angle(report.pseudo, resolved.unit, false),
        kahler: maybe_angle(report.kahler, resolved.unit, unoriented),
        plane_class,
        residuals: report.residuals,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceKind {
    PrincipalAngles,
    Isoclinic,
    JImage,
}

impl SubspaceKind {
    fn as_str(self) -> &'static str {
        match self {
            SubspaceKind::PrincipalAngles => "principal-angles",
            SubspaceKind::Isoclinic => "isoclinic",
            SubspaceKind::JImage => "j-image",
        }
    }
}

pub fn cmd_subspace(
    doc: &InputDocument,
    kind: SubspaceKind,
    planes: &str,
    degrees: bool,
    tol: Option<f64>,
    unoriented: bool,
) -> Result<SubspaceDocument, CliError> {
    let resolved = resolve_options(doc, degrees, tol)?;

    if kind == SubspaceKind::JImage {
        if planes.contains(',') {
            return Err(CliError::Usage(format!(
                "j-image takes a single plane name, got '{planes}'"
            )));
        }
        let p = lookup_plane(doc, planes, resolved.tolerance)?;
        let image = p.j_image();
        let angles = p
            .principal_angles(&image)
            .map_err(|e| core_error("principal angles", e))?;
        let iso = p
            .is_isoclinic(&image, resolved.tolerance)
            .map_err(|e| core_error("isocliny test", e))?;
        let k = p.kahler_angle();
        let k = if unoriented { k.min(PI - k) } else { k };
        return Ok(SubspaceDocument {
            schema_version: SCHEMA_VERSION,
            command: "subspace",
            subcommand: kind.as_str(),
            planes: vec![planes.to_owned()],
            unit: resolved.unit.as_str(),
            tolerance: resolved.tolerance,
            image_span_u: Some(image.span_u().entries().to_vec()),
            image_span_v: Some(image.span_v().entries().to_vec()),
            kahler_angle: Some(convert(k, resolved.unit)),
            alpha_min: convert(angles.alpha_min, resolved.unit),
            alpha_max: convert(angles.alpha_max, resolved.unit),
            isoclinic: Some(iso.isoclinic),
            angle: Some(if iso.isoclinic {
                MaybeAngle::defined(convert(iso.angle, resolved.unit))
            } else {
                MaybeAngle::undefined("not_isoclinic")
            }),
        });
    }

    let (name_p, name_q) = split_pair(planes)?;
    let p = lookup_plane(doc, name_p, resolved.tolerance)?;
    let q = lookup_plane(doc, name_q, resolved.tolerance)?;
    if p.ambient_dim() != q.ambient_dim() {
        return Err(CliError::Usage(format!(
            "planes '{name_p}' and '{name_q}' have different ambient dimensions ({} vs {})",
            p.ambient_dim(),
            q.ambient_dim()
        )));
    }
    let angles = p
        .principal_angles(&q)
        .map_err(|e| core_error("principal angles", e))?;

    let (isoclinic, angle) = match kind {
        SubspaceKind::Isoclinic => {
            let iso = p
                .is_isoclinic(&q, resolved.tolerance)
                .map_err(|e| core_error("isocliny test", e))?;
            let angle = if iso.isoclinic {
                MaybeAngle::defined(convert(iso.angle, resolved.unit))
            } else {
                MaybeAngle::undefined("not_isoclinic")
            };
            (Some(iso.isoclinic), Some(angle))
        }
        _ => (None, None),
    };

    Ok(SubspaceDocument {
        schema_version: SCHEMA_VERSION,
        command: "subspace",
        subcommand: kind.as_str(),
        planes: vec![name_p.to_owned(), name_q.to_owned()],
        unit: resolved.unit.as_str(),
        tolerance: resolved.tolerance,
        image_span_u: None,
        image_span_v: None,
        kahler_angle: None,
        alpha_min: convert(angles.alpha_min, resolved.unit),
        alpha_max: convert(angles.alpha_max, resolved.unit),
        isoclinic,
        angle,
    })
}
