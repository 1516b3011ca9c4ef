//! Vector types, the isometric embedding of C^n into R^{2n}, inner products,
//! and the complex structure J.
//!
//! The embedding convention interleaves real and imaginary parts: entry `k`
//! of a complex vector lands in real coordinates `2k` (real part) and
//! `2k + 1` (imaginary part). Under that layout, multiplication by `i`
//! becomes the local coordinate rule implemented by [`RealVector::apply_j`].

use num_complex::Complex64;

use crate::error::{GeometryError, Result};

/// Element of C^n under the Hermitian product `(a, b) = sum conj(a_k) b_k`.
///
/// Construction rejects empty vectors and non-finite entries; every
/// downstream angle formula divides by a norm.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    entries: Vec<Complex64>,
}

impl ComplexVector {
    pub fn new(entries: Vec<Complex64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(GeometryError::EmptyVector);
        }
        for (index, z) in entries.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(GeometryError::NonFiniteEntry { index });
            }
        }
        Ok(Self { entries })
    }

    /// Builds a vector from `(re, im)` pairs.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|&(re, im)| Complex64::new(re, im))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Isometric image in R^{2n}: real part of entry `k` at coordinate `2k`,
    /// imaginary part at `2k + 1`.
    pub fn embed(&self) -> RealVector {
        let mut out = Vec::with_capacity(2 * self.entries.len());
        for z in &self.entries {
            out.push(z.re);
            out.push(z.im);
        }
        RealVector { entries: out }
    }

    /// Hermitian product, conjugate-linear in `self` and linear in `other`.
    pub fn hermitian_inner(&self, other: &Self) -> Result<Complex64> {
        if self.len() != other.len() {
            return Err(GeometryError::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }

    /// Entrywise scaling by a complex factor.
    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if self.is_zero() || n == 0.0 || !n.is_finite() {
            return Err(GeometryError::ZeroVector);
        }
        Ok(self.scaled(Complex64::new(1.0 / n, 0.0)))
    }
}

/// Element of a real Euclidean space R^m with the dot product.
#[derive(Debug, Clone, PartialEq)]
pub struct RealVector {
    entries: Vec<f64>,
}

impl RealVector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(GeometryError::EmptyVector);
        }
        for (index, x) in entries.iter().enumerate() {
            if !x.is_finite() {
                return Err(GeometryError::NonFiniteEntry { index });
            }
        }
        Ok(Self { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn dot(&self, other: &Self) -> Result<f64> {
        if self.len() != other.len() {
            return Err(GeometryError::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum())
    }

    pub fn norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| *x == 0.0)
    }

    /// Angle between two real vectors in [0, pi], with the cosine clamped
    /// against rounding past the arccos domain.
    pub fn angle_to(&self, other: &Self) -> Result<f64> {
        if self.is_zero() || other.is_zero() {
            return Err(GeometryError::ZeroVector);
        }
        let cos = self.dot(other)? / (self.norm() * other.norm());
        Ok(cos.clamp(-1.0, 1.0).acos())
    }

    /// Image under the complex structure J, realizing `a -> i a` in the
    /// embedding convention: coordinates `(x, y)` of each complex entry map
    /// to `(-y, x)`.
    pub fn apply_j(&self) -> Result<Self> {
        if !self.len().is_multiple_of(2) {
            return Err(GeometryError::OddLength { len: self.len() });
        }
        let mut out = Vec::with_capacity(self.len());
        for pair in self.entries.chunks_exact(2) {
            out.push(-pair[1]);
            out.push(pair[0]);
        }
        Ok(Self { entries: out })
    }

    /// Inverse of [`ComplexVector::embed`]; exact for any even-length input.
    pub fn unembed(&self) -> Result<ComplexVector> {
        if !self.len().is_multiple_of(2) {
            return Err(GeometryError::OddLength { len: self.len() });
        }
        let entries = self
            .entries
            .chunks_exact(2)
            .map(|pair| Complex64::new(pair[0], pair[1]))
            .collect();
        ComplexVector::new(entries)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            entries: self.entries.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(GeometryError::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Self {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scaled(-1.0))
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if self.is_zero() || n == 0.0 || !n.is_finite() {
            return Err(GeometryError::ZeroVector);
        }
        Ok(self.scaled(1.0 / n))
    }
}
