//! Seeded random geometry used by the selftest suite and the test harness.

use hermangle_core::{ComplexVector, RealVector, TwoPlane};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

fn gaussian<R: Rng>(rng: &mut R) -> f64 {
    StandardNormal.sample(rng)
}

pub fn real_vector<R: Rng>(rng: &mut R, dim: usize) -> RealVector {
    loop {
        let v = RealVector::new((0..dim).map(|_| gaussian(rng)).collect()).unwrap();
        if v.norm() > 1e-6 {
            return v;
        }
    }
}

pub fn unit_real_vector<R: Rng>(rng: &mut R, dim: usize) -> RealVector {
    real_vector(rng, dim).normalized().unwrap()
}

pub fn complex_vector<R: Rng>(rng: &mut R, n: usize) -> ComplexVector {
    loop {
        let pairs: Vec<(f64, f64)> = (0..n).map(|_| (gaussian(rng), gaussian(rng))).collect();
        let v = ComplexVector::from_pairs(&pairs).unwrap();
        if v.norm() > 1e-6 {
            return v;
        }
    }
}

pub fn unit_complex_vector<R: Rng>(rng: &mut R, n: usize) -> ComplexVector {
    complex_vector(rng, n).normalized().unwrap()
}

/// Random oriented 2-plane in R^dim, from a Gaussian spanning pair. Pairs
/// too close to parallel are resampled so the orthonormalization stays well
/// conditioned.
pub fn plane<R: Rng>(rng: &mut R, dim: usize) -> TwoPlane {
    assert!(
        dim >= 4 && dim.is_multiple_of(2),
        "plane sampling needs even dim >= 4"
    );
    loop {
        let a = real_vector(rng, dim);
        let b = real_vector(rng, dim);
        if let Ok(p) = TwoPlane::from_spanning_pair_with_tol(&a, &b, 1e-3) {
            return p;
        }
    }
}
