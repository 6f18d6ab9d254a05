//! Split-complex (hyperbolic) numbers `x + jy` with `j² = 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::AlgebraError;

/// An element `re + j·im` of the split-complex plane.
///
/// Unlike the complex numbers this is not a division algebra: every element
/// on the light cone `|re| = |im|` is a zero divisor.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SplitComplex {
    pub re: f64,
    pub im: f64,
}

impl SplitComplex {
    pub const ONE: SplitComplex = SplitComplex { re: 1.0, im: 0.0 };
    pub const ZERO: SplitComplex = SplitComplex { re: 0.0, im: 0.0 };
    pub const J: SplitComplex = SplitComplex { re: 0.0, im: 1.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        SplitComplex { re, im }
    }

    /// Like [`SplitComplex::new`] but rejects NaN and infinite components.
    pub fn try_new(re: f64, im: f64) -> Result<Self, AlgebraError> {
        if re.is_finite() && im.is_finite() {
            Ok(SplitComplex { re, im })
        } else {
            Err(AlgebraError::NonFinite)
        }
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// `re − j·im`.
    pub fn conj(&self) -> Self {
        SplitComplex::new(self.re, -self.im)
    }

    /// The Minkowski quadratic form `w·w̄ = re² − im²`.
    ///
    /// Evaluated as `(re − im)(re + im)` so that elements near the light
    /// cone keep their relative accuracy.
    pub fn minkowski_form(&self) -> f64 {
        (self.re - self.im) * (self.re + self.im)
    }

    /// The Minkowski modulus `√|re² − im²|`. Multiplicative, zero on the
    /// light cone, and not subadditive.
    ///
    /// Evaluated from the light-cone factors `|re − im|·|re + im|`, which
    /// avoids cancellation; the factors are rooted separately when their
    /// product leaves the normal range.
    pub fn minkowski_modulus(&self) -> f64 {
        let (d, s) = ((self.re - self.im).abs(), (self.re + self.im).abs());
        let p = d * s;
        if p.is_normal() {
            p.sqrt()
        } else {
            d.sqrt() * s.sqrt()
        }
    }

    /// The algebra norm `√(2(re² + im²))`, under which the split-complex
    /// plane is a Banach algebra (the norm is submultiplicative).
    pub fn banach_norm(&self) -> f64 {
        std::f64::consts::SQRT_2 * self.re.hypot(self.im)
    }

    /// `w⁻¹ = w̄ / (w·w̄)`. Lightlike elements have no inverse.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let form = self.minkowski_form();
        if form == 0.0 {
            return Err(AlgebraError::LightlikeNotInvertible);
        }
        let inv = SplitComplex::new(self.re / form, -self.im / form);
        if inv.is_finite() {
            Ok(inv)
        } else {
            Err(AlgebraError::Overflow)
        }
    }

    /// Closed-form exponential `e^{re}·(cosh im + j sinh im)`.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        let scale = self.re.exp();
        let out = SplitComplex::new(scale * self.im.cosh(), scale * self.im.sinh());
        if out.is_finite() {
            Ok(out)
        } else {
            Err(AlgebraError::Overflow)
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        SplitComplex::new(self.re * s, self.im * s)
    }
}

impl Add for SplitComplex {
    type Output = SplitComplex;
    fn add(self, rhs: SplitComplex) -> SplitComplex {
        SplitComplex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for SplitComplex {
    type Output = SplitComplex;
    fn sub(self, rhs: SplitComplex) -> SplitComplex {
        SplitComplex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for SplitComplex {
    type Output = SplitComplex;
    fn neg(self) -> SplitComplex {
        SplitComplex::new(-self.re, -self.im)
    }
}

impl Mul for SplitComplex {
    type Output = SplitComplex;
    fn mul(self, rhs: SplitComplex) -> SplitComplex {
        SplitComplex::new(self.re * rhs.re + self.im * rhs.im, self.re * rhs.im + self.im * rhs.re)
    }
}

impl Mul<f64> for SplitComplex {
    type Output = SplitComplex;
    fn mul(self, rhs: f64) -> SplitComplex {
        self.scale(rhs)
    }
}

impl From<f64> for SplitComplex {
    fn from(re: f64) -> Self {
        SplitComplex::new(re, 0.0)
    }
}

impl fmt::Display for SplitComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_sign_negative() {
            write!(f, "{}-{}j", self.re, -self.im)
        } else {
            write!(f, "{}+{}j", self.re, self.im)
        }
    }
}
