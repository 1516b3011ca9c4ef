//! Compensated floating-point arithmetic for the angle kernel.
//!
//! The inter-angle identities are asserted at tolerances down to 1e-12, and
//! some of their inputs (the modulus of a normalized Hermitian product, the
//! Kähler cosine of a nearly holomorphic pair) sit right at cancellation
//! points where a plain f64 evaluation loses half its digits. Accumulating
//! the handful of inner products behind those quantities in double-double
//! precision keeps every downstream arccos argument correctly rounded, so a
//! pair lying exactly on a special configuration (same complex line, exactly
//! real pair) reproduces the special value exactly instead of within ~1e-8.

/// Unevaluated sum of two doubles with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Requires |a| >= |b| (or a == 0).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sq(self) -> Dd {
        self.mul(self)
    }

    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul(Dd::from_f64(q1)));
        let q2 = r.value() / other.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }

    /// Square root with one Newton refinement; clamps tiny negative inputs
    /// (rounding residue of a cancellation) to zero.
    #[inline]
    pub fn sqrt(self) -> Dd {
        if self.value() <= 0.0 {
            return Dd::ZERO;
        }
        let s = self.hi.sqrt();
        let (p, e) = two_prod(s, s);
        let residue = self.sub(Dd { hi: p, lo: e });
        let corr = residue.value() / (2.0 * s);
        let (hi, lo) = quick_two_sum(s, corr);
        Dd { hi, lo }
    }
}

/// Dot product accumulated in double-double precision (Ogita-Rump `Dot2`).
pub(crate) fn dot_dd(x: &[f64], y: &[f64]) -> Dd {
    debug_assert_eq!(x.len(), y.len());
    let mut acc = Dd::ZERO;
    for (a, b) in x.iter().zip(y) {
        let (p, e) = two_prod(*a, *b);
        acc = acc.add(Dd { hi: p, lo: e });
    }
    acc
}

/// Rescales entries by an exact power of two so the largest magnitude lands
/// in [1, 2). Keeps squared norms and their products far from overflow and
/// underflow while changing no ratio of inner products.
pub(crate) fn pow2_rescale(entries: &[f64]) -> Vec<f64> {
    let max = entries.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if max == 0.0 {
        return entries.to_vec();
    }
    let p = -(max.log2().floor() as i32);
    if p == 0 {
        return entries.to_vec();
    }
    // split the exponent so each factor stays representable (|p| can reach
    // 1074 for subnormal inputs, past the 2^1023 limit of a single factor)
    let a = p / 2;
    let b = p - a;
    let (fa, fb) = (2.0f64.powi(a), 2.0f64.powi(b));
    entries.iter().map(|x| x * fa * fb).collect()
}
