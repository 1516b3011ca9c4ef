//! Property tests for 2-plane geometry: intrinsicality of the Kähler angle,
//! the isocliny theorems, and agreement of the spectral principal angles
//! with the variational grid scan.

use std::f64::consts::{FRAC_PI_2, PI};

use hermangle_core::{hermitian_angle, ComplexVector, RealVector, TwoPlane};
use proptest::prelude::*;

fn real_vector(dim: usize) -> impl Strategy<Value = RealVector> {
    prop::collection::vec(-1.0f64..1.0, dim).prop_filter_map("nonzero", |xs| {
        let v = RealVector::new(xs).ok()?;
        (v.norm() > 1e-2).then_some(v)
    })
}

fn plane(dim: usize) -> impl Strategy<Value = TwoPlane> {
    (real_vector(dim), real_vector(dim)).prop_filter_map("well separated pair", |(a, b)| {
        let p = TwoPlane::from_spanning_pair(&a, &b).ok()?;
        // keep the spanning pair's sine away from zero so the
        // orthonormalization is well conditioned
        let sin = b
            .sub(&p.span_u().scaled(b.dot(p.span_u()).unwrap()))
            .unwrap()
            .norm()
            / b.norm();
        (sin > 0.05).then_some(p)
    })
}

fn any_plane() -> impl Strategy<Value = TwoPlane> {
    prop_oneof![plane(4), plane(6), plane(8)]
}

fn plane_pair() -> impl Strategy<Value = (TwoPlane, TwoPlane)> {
    prop_oneof![
        (plane(4), plane(4)),
        (plane(6), plane(6)),
        (plane(8), plane(8)),
    ]
}

fn complex_vector(n: usize) -> impl Strategy<Value = ComplexVector> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n).prop_filter_map(
        "norm bounded away from zero",
        |pairs| {
            let v = ComplexVector::from_pairs(&pairs).ok()?;
            (v.norm() > 1e-2).then_some(v)
        },
    )
}

fn complex_pair() -> impl Strategy<Value = (ComplexVector, ComplexVector)> {
    (2usize..=4).prop_flat_map(|n| (complex_vector(n), complex_vector(n)))
}

fn angle_well_conditioned(angle: f64) -> bool {
    let s = angle.sin();
    s == 0.0 || s.abs() >= 1e-4
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn kahler_angle_is_intrinsic_to_the_oriented_plane(
        p in any_plane(),
        coeffs in (-2.0f64..2.0, -2.0f64..2.0, -2.0f64..2.0, -2.0f64..2.0),
    ) {
        let (c00, c01, c10, c11) = coeffs;
        // orientation-preserving, well-conditioned re-spanning
        prop_assume!((c00 * c11 - c01 * c10) > 0.1);
        let a = p.span_u().scaled(c00).add(&p.span_v().scaled(c01)).unwrap();
        let b = p.span_u().scaled(c10).add(&p.span_v().scaled(c11)).unwrap();
        let respanned = TwoPlane::from_spanning_pair(&a, &b).unwrap();
        let base = p.kahler_angle();
        if angle_well_conditioned(base) {
            prop_assert!((respanned.kahler_angle() - base).abs() <= 1e-10);
        }
    }

    #[test]
    fn orientation_reversal_maps_kahler_to_supplement(p in any_plane()) {
        let base = p.kahler_angle();
        if angle_well_conditioned(base) {
            prop_assert!((p.reversed().kahler_angle() - (PI - base)).abs() <= 1e-10);
        }
    }

    #[test]
    fn holomorphic_planes_are_isoclinic_at_the_hermitian_angle((a, b) in complex_pair()) {
        let pa = TwoPlane::holomorphic(&a).unwrap();
        let pb = TwoPlane::holomorphic(&b).unwrap();
        let iso = pa.is_isoclinic(&pb, 1e-9).unwrap();
        prop_assert!(iso.isoclinic);
        let expected = hermitian_angle(&a, &b).unwrap();
        prop_assert!((iso.angle - expected).abs() <= 1e-9);
    }

    #[test]
    fn j_image_is_isoclinic_at_the_folded_kahler_angle(p in any_plane()) {
        let iso = p.is_isoclinic(&p.j_image(), 1e-9).unwrap();
        prop_assert!(iso.isoclinic);
        let k = p.kahler_angle();
        prop_assert!((iso.angle - k.min(PI - k)).abs() <= 1e-9);
    }

    #[test]
    fn projection_between_holomorphic_planes_spans_antiholomorphic_plane(
        (a, b) in complex_pair(),
        t in 0.0f64..PI,
    ) {
        let pa = TwoPlane::holomorphic(&a).unwrap();
        let pb = TwoPlane::holomorphic(&b).unwrap();
        let x = pa
            .span_u()
            .scaled(t.cos())
            .add(&pa.span_v().scaled(t.sin()))
            .unwrap();
        let y = pb.project(&x).unwrap();
        prop_assume!(y.norm() > 1e-6);
        prop_assume!(x.sub(&y).unwrap().norm() > 1e-6 * x.norm());
        let spanned = TwoPlane::from_spanning_pair(&x, &y).unwrap();
        prop_assert!((spanned.kahler_angle() - FRAC_PI_2).abs() <= 1e-9);
    }

    #[test]
    fn principal_angles_stay_in_range_and_sorted((p, q) in plane_pair()) {
        let pa = p.principal_angles(&q).unwrap();
        prop_assert!(pa.alpha_min >= 0.0);
        prop_assert!(pa.alpha_max <= FRAC_PI_2);
        prop_assert!(pa.alpha_min <= pa.alpha_max);
    }
}

proptest! {
    // the grid scan dominates the runtime; fewer cases suffice here
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spectral_angles_agree_with_the_grid_scan((p, q) in plane_pair()) {
        let spectral = p.principal_angles(&q).unwrap();
        let scanned = p.stationary_angles_scan(&q, 10_000).unwrap();
        prop_assert!((spectral.alpha_min - scanned.alpha_min).abs() <= 2e-3);
        prop_assert!((spectral.alpha_max - scanned.alpha_max).abs() <= 2e-3);
    }
}
