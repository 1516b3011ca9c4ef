//! Property tests for the vector operations and the five-angle computations.

use std::f64::consts::PI;

use hermangle_core::angles::residuals;
use hermangle_core::{
    angle_report, hermitian_angle, hermitian_projection, kahler_angle, AngleReport, AngleValue,
    Complex64, ComplexVector,
};
use proptest::prelude::*;

fn complex_vector(n: usize) -> impl Strategy<Value = ComplexVector> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n).prop_filter_map(
        "norm bounded away from zero",
        |pairs| {
            let v = ComplexVector::from_pairs(&pairs).ok()?;
            (v.norm() > 1e-3).then_some(v)
        },
    )
}

fn vector_pair() -> impl Strategy<Value = (ComplexVector, ComplexVector)> {
    (1usize..=8).prop_flat_map(|n| (complex_vector(n), complex_vector(n)))
}

/// Entrywise real-coefficient combination `cx * x + cy * y`.
fn combo(x: &ComplexVector, cx: f64, y: &ComplexVector, cy: f64) -> ComplexVector {
    let entries = x
        .entries()
        .iter()
        .zip(y.entries())
        .map(|(a, b)| a * cx + b * cy)
        .collect();
    ComplexVector::new(entries).unwrap()
}

/// Comparing two arccos outputs at tolerance 1e-10 only makes sense away
/// from the poles, where a one-ulp change of the cosine moves the angle by
/// sqrt(ulp) >> 1e-10. Exact poles are fine: the kernel reproduces them
/// exactly on both sides of any comparison.
fn angle_well_conditioned(angle: f64) -> bool {
    let s = angle.sin();
    s == 0.0 || s.abs() >= 1e-4
}

fn report_well_conditioned(r: &AngleReport) -> bool {
    angle_well_conditioned(r.euclidean)
        && angle_well_conditioned(r.hermitian)
        && match r.kahler {
            AngleValue::Defined(k) => angle_well_conditioned(k),
            AngleValue::Undefined(_) => true,
        }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn embedding_is_an_isometry((a, _) in vector_pair()) {
        let diff = (a.embed().norm() - a.norm()).abs();
        prop_assert!(diff <= 1e-12 * a.norm());
    }

    #[test]
    fn j_squares_to_minus_identity((a, _) in vector_pair()) {
        let ea = a.embed();
        let jj = ea.apply_j().unwrap().apply_j().unwrap();
        prop_assert_eq!(jj, ea.scaled(-1.0));
    }

    #[test]
    fn j_is_antisymmetric_in_the_dot_product((a, b) in vector_pair()) {
        let ea = a.embed();
        let eb = b.embed();
        let left = ea.apply_j().unwrap().dot(&eb).unwrap();
        let right = -ea.dot(&eb.apply_j().unwrap()).unwrap();
        prop_assert!((left - right).abs() <= 1e-12);
    }

    #[test]
    fn hermitian_product_is_conjugate_symmetric((a, b) in vector_pair()) {
        let ab = a.hermitian_inner(&b).unwrap();
        let ba = b.hermitian_inner(&a).unwrap();
        prop_assert_eq!(ab, ba.conj());
    }

    #[test]
    fn hermitian_product_decomposes_into_real_dots((a, b) in vector_pair()) {
        let a = a.normalized().unwrap();
        let b = b.normalized().unwrap();
        let inner = a.hermitian_inner(&b).unwrap();
        let ea = a.embed();
        let eb = b.embed();
        let re = ea.dot(&eb).unwrap();
        let im = ea.apply_j().unwrap().dot(&eb).unwrap();
        prop_assert!((inner - Complex64::new(re, im)).norm() <= 1e-12);
    }

    #[test]
    fn decomposition_and_sine_identities_hold((a, b) in vector_pair()) {
        let report = angle_report(&a, &b).unwrap();
        if let Some(r) = report.residuals.get(residuals::COSINE_DECOMPOSITION) {
            prop_assert!(*r <= 1e-10, "cosine decomposition residual {}", r);
        }
        if let Some(r) = report.residuals.get(residuals::SINE_PRODUCT) {
            prop_assert!(*r <= 1e-10, "sine product residual {}", r);
        }
    }

    #[test]
    fn pseudo_angle_identities_hold_where_recorded((a, b) in vector_pair()) {
        let report = angle_report(&a, &b).unwrap();
        for name in [
            residuals::COSINE_FACTORIZATION,
            residuals::PSEUDO_SINE,
            residuals::PSEUDO_TANGENT,
        ] {
            if let Some(r) = report.residuals.get(name) {
                prop_assert!(*r <= 1e-8, "{} residual {}", name, r);
            }
        }
    }

    #[test]
    fn cauchy_bound_holds((a, b) in vector_pair()) {
        let report = angle_report(&a, &b).unwrap();
        prop_assert!(report.rho <= 1.0 + 1e-12);
        prop_assert!(report.hermitian.is_finite());
        prop_assert!((0.0..=PI / 2.0 + 1e-15).contains(&report.hermitian));
    }

    #[test]
    fn angles_are_scale_invariant(
        (a, b) in vector_pair(),
        lambda in 0.05f64..20.0,
        mu in 0.05f64..20.0,
    ) {
        let base = angle_report(&a, &b).unwrap();
        if !report_well_conditioned(&base) {
            return Ok(());
        }
        let scaled = angle_report(
            &a.scaled(Complex64::new(lambda, 0.0)),
            &b.scaled(Complex64::new(mu, 0.0)),
        )
        .unwrap();
        prop_assert!((base.euclidean - scaled.euclidean).abs() <= 1e-10);
        prop_assert!((base.hermitian - scaled.hermitian).abs() <= 1e-10);
        prop_assert!((base.complex_cosine - scaled.complex_cosine).norm() <= 1e-10);
        match (base.pseudo, scaled.pseudo) {
            (AngleValue::Defined(x), AngleValue::Defined(y)) => {
                prop_assert!((x - y).abs() <= 1e-10)
            }
            (x, y) => prop_assert_eq!(x, y),
        }
        match (base.kahler, scaled.kahler) {
            (AngleValue::Defined(x), AngleValue::Defined(y)) => {
                prop_assert!((x - y).abs() <= 1e-10)
            }
            (x, y) => prop_assert_eq!(x, y),
        }
    }

    #[test]
    fn hermitian_angle_is_phase_invariant(
        (a, b) in vector_pair(),
        phase_a in -PI..PI,
        phase_b in -PI..PI,
    ) {
        let base = hermitian_angle(&a, &b).unwrap();
        if !angle_well_conditioned(base) {
            return Ok(());
        }
        let a2 = a.scaled(Complex64::from_polar(1.0, phase_a));
        let b2 = b.scaled(Complex64::from_polar(1.0, phase_b));
        prop_assert!((hermitian_angle(&a2, &b2).unwrap() - base).abs() <= 1e-10);
        // the euclidean and Kähler angles change under phases in general;
        // they must still land in their ranges without failing
        let report = angle_report(&a2, &b2).unwrap();
        prop_assert!((0.0..=PI).contains(&report.euclidean));
        if let AngleValue::Defined(k) = report.kahler {
            prop_assert!((0.0..=PI).contains(&k));
        }
    }

    #[test]
    fn swapping_arguments_flips_the_kahler_angle((a, b) in vector_pair()) {
        if let (AngleValue::Defined(fwd), AngleValue::Defined(rev)) =
            (kahler_angle(&a, &b).unwrap(), kahler_angle(&b, &a).unwrap())
        {
            if angle_well_conditioned(fwd) {
                prop_assert!((rev - (PI - fwd)).abs() <= 1e-10);
            }
        }
    }

    #[test]
    fn projection_length_is_the_hermitian_cosine((a, b) in vector_pair()) {
        let proj = hermitian_projection(&a, &b).unwrap();
        let expected = a.norm() * hermitian_angle(&a, &b).unwrap().cos();
        prop_assert!((proj.norm() - expected).abs() <= 1e-12 * a.norm().max(1.0));
    }

    #[test]
    fn rotating_an_orthogonal_pair_preserves_the_hermitian_product(
        (a, b) in vector_pair(),
        t in 0.0f64..PI,
    ) {
        // make the embedded pair Euclidean-orthogonal and unit
        let a = a.normalized().unwrap();
        let cos_theta = a.embed().dot(&b.embed()).unwrap() / b.norm();
        let b_perp = combo(&b, 1.0 / b.norm(), &a, -cos_theta);
        if b_perp.norm() < 1e-3 {
            return Ok(());
        }
        let b = b_perp.normalized().unwrap();

        let base_inner = a.hermitian_inner(&b).unwrap();
        let a2 = combo(&a, t.cos(), &b, t.sin());
        let b2 = combo(&a, -t.sin(), &b, t.cos());
        let rotated_inner = a2.hermitian_inner(&b2).unwrap();
        prop_assert!((rotated_inner - base_inner).norm() <= 1e-12);

        if let (AngleValue::Defined(k1), AngleValue::Defined(k2)) =
            (kahler_angle(&a, &b).unwrap(), kahler_angle(&a2, &b2).unwrap())
        {
            if angle_well_conditioned(k1) {
                prop_assert!((k1 - k2).abs() <= 1e-10);
            }
        }
    }
}
