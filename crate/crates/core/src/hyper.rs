//! Single-term forms for `a·cosh ωt + b·sinh ωt`.
//!
//! Depending on the sign of `a² − b²` such a signal is a scaled, shifted
//! hyperbolic cosine (spacelike coefficients), a scaled, shifted hyperbolic
//! sine (timelike), or a pure exponential (lightlike).

use std::fmt;

use thiserror::Error;

use crate::algebra::{classify_vector, near_light_cone, CausalClass, SplitComplex};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HyperError {
    #[error("result exceeds the floating-point range")]
    Overflow,
    #[error("polar form requires a > |b| (got a = {a}, b = {b})")]
    OutsideDerivationDomain { a: f64, b: f64 },
    #[error("{0}")]
    DomainError(&'static str),
}

fn finite(x: f64) -> Result<f64, HyperError> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(HyperError::Overflow)
    }
}

/// `a·cosh(omega·t) + b·sinh(omega·t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicSignal {
    pub a: f64,
    pub b: f64,
    pub omega: f64,
}

impl HyperbolicSignal {
    pub fn new(a: f64, b: f64, omega: f64) -> Self {
        HyperbolicSignal { a, b, omega }
    }

    /// Evaluated on the light-cone basis, `((a+b)e^x + (a−b)e^{−x}) / 2`,
    /// which is exact algebra for the definition of cosh and sinh and avoids
    /// the cancellation `a cosh x + b sinh x` suffers when `a ≈ −b` and `x`
    /// is large.
    pub fn eval(&self, t: f64) -> Result<f64, HyperError> {
        let x = self.omega * t;
        let plus = self.a + self.b;
        let minus = self.a - self.b;
        let grow = if plus == 0.0 { 0.0 } else { plus * x.exp() };
        let decay = if minus == 0.0 { 0.0 } else { minus * (-x).exp() };
        finite(0.5 * grow + 0.5 * decay)
    }

    pub fn classify(&self) -> CausalClass {
        classify_vector(self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HyperKind {
    /// `m·cosh(ωt + δ)`
    PosCosh,
    /// `−m·cosh(ωt + δ)`
    NegCosh,
    /// `m·sinh(ωt + δ)`
    PosSinh,
    /// `−m·sinh(ωt + δ)`
    NegSinh,
    /// `a·e^{ωt}`
    ExpPlus,
    /// `a·e^{−ωt}`
    ExpMinus,
}

impl HyperKind {
    pub fn causal_class(self) -> CausalClass {
        match self {
            HyperKind::PosCosh | HyperKind::NegCosh => CausalClass::Spacelike,
            HyperKind::PosSinh | HyperKind::NegSinh => CausalClass::Timelike,
            HyperKind::ExpPlus | HyperKind::ExpMinus => CausalClass::Lightlike,
        }
    }
}

impl fmt::Display for HyperKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Canonical single-term form of a [`HyperbolicSignal`].
///
/// For the cosh/sinh kinds `amplitude` is the Minkowski modulus
/// `m = √|a² − b²| > 0` and `shift` is `δ = ½ ln|(a+b)/(a−b)|`. For the two
/// exponential kinds `amplitude` is the signed coefficient and `shift` is 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalHyperbolic {
    pub kind: HyperKind,
    pub amplitude: f64,
    pub shift: f64,
    pub omega: f64,
}

impl CanonicalHyperbolic {
    pub fn eval(&self, t: f64) -> Result<f64, HyperError> {
        let x = self.omega * t;
        let value = match self.kind {
            HyperKind::PosCosh => self.amplitude * (x + self.shift).cosh(),
            HyperKind::NegCosh => -self.amplitude * (x + self.shift).cosh(),
            HyperKind::PosSinh => self.amplitude * (x + self.shift).sinh(),
            HyperKind::NegSinh => -self.amplitude * (x + self.shift).sinh(),
            HyperKind::ExpPlus if self.amplitude == 0.0 => 0.0,
            HyperKind::ExpPlus => self.amplitude * x.exp(),
            HyperKind::ExpMinus => self.amplitude * (-x).exp(),
        };
        finite(value)
    }

    /// The signed coefficient in front of the cosh/sinh/exp.
    pub fn signed_amplitude(&self) -> f64 {
        match self.kind {
            HyperKind::NegCosh | HyperKind::NegSinh => -self.amplitude,
            _ => self.amplitude,
        }
    }
}

/// `atanh(q/p)` for `|q| < |p|`, i.e. `½ ln((p+q)/(p−q))`, computed without
/// forming the rounded quotient `q/p` so it stays accurate near `|q| = |p|`.
fn half_log_ratio(p: f64, q: f64) -> f64 {
    if (q >= 0.0) == (p >= 0.0) {
        0.5 * (2.0 * q / (p - q)).ln_1p()
    } else {
        -0.5 * (-2.0 * q / (p + q)).ln_1p()
    }
}

fn minkowski_modulus(a: f64, b: f64) -> f64 {
    SplitComplex::new(a, b).minkowski_modulus()
}

/// Rewrites `a·cosh ωt + b·sinh ωt` as a single term.
///
/// Case selection uses exact comparisons:
///
/// | condition   | form                 |
/// |-------------|----------------------|
/// | `a > |b|`   | `m·cosh(ωt + δ)`     |
/// | `−a > |b|`  | `−m·cosh(ωt + δ)`    |
/// | `b > |a|`   | `m·sinh(ωt + δ)`     |
/// | `−b > |a|`  | `−m·sinh(ωt + δ)`    |
/// | `a = b`     | `a·e^{ωt}`           |
/// | `a = −b`    | `a·e^{−ωt}`          |
///
/// with `m = √|a² − b²|` and `δ = ½ ln|(a+b)/(a−b)|`. The zero signal
/// (`a = b = 0`) is reported as `ExpPlus` with coefficient 0.
pub fn hyper_canonicalize(s: &HyperbolicSignal) -> CanonicalHyperbolic {
    let (a, b, omega) = (s.a, s.b, s.omega);
    let exp_form = |kind, amplitude| CanonicalHyperbolic { kind, amplitude, shift: 0.0, omega };
    if a == b {
        return exp_form(HyperKind::ExpPlus, a);
    }
    if a == -b {
        return exp_form(HyperKind::ExpMinus, a);
    }
    let m = minkowski_modulus(a, b);
    let (kind, shift) = if a > b.abs() {
        (HyperKind::PosCosh, half_log_ratio(a, b))
    } else if -a > b.abs() {
        (HyperKind::NegCosh, half_log_ratio(a, b))
    } else if b > a.abs() {
        (HyperKind::PosSinh, half_log_ratio(b, a))
    } else {
        (HyperKind::NegSinh, half_log_ratio(b, a))
    };
    CanonicalHyperbolic { kind, amplitude: m, shift, omega }
}

/// Like [`hyper_canonicalize`], but coefficient pairs within the relative
/// light-cone band `|a² − b²| ≤ eps·(a² + b²)` are snapped onto the nearest
/// exponential case first. Lossy by construction; `eps = 0` is exact.
pub fn hyper_canonicalize_snapped(s: &HyperbolicSignal, eps: f64) -> CanonicalHyperbolic {
    if eps > 0.0 && near_light_cone(s.a, s.b, eps) {
        let (a, b) = (s.a, s.b);
        let snapped = if (a - b).abs() <= (a + b).abs() {
            let c = 0.5 * (a + b);
            HyperbolicSignal::new(c, c, s.omega)
        } else {
            let c = 0.5 * (a - b);
            HyperbolicSignal::new(c, -c, s.omega)
        };
        return hyper_canonicalize(&snapped);
    }
    hyper_canonicalize(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HyperFn {
    Cosh,
    Sinh,
}

/// `coef · f(ωt + shift)` for `f` one of cosh, sinh.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftedTerm {
    pub coef: f64,
    pub shift: f64,
    pub func: HyperFn,
}

impl ShiftedTerm {
    pub fn new(coef: f64, shift: f64, func: HyperFn) -> Self {
        ShiftedTerm { coef, shift, func }
    }

    /// Coefficients `(α, β)` with `coef·f(x + shift) = α cosh x + β sinh x`.
    pub fn basis_coefficients(&self) -> Result<(f64, f64), HyperError> {
        if self.coef == 0.0 {
            return Ok((0.0, 0.0));
        }
        let (ch, sh) = (finite(self.shift.cosh())?, self.shift.sinh());
        let (alpha, beta) = match self.func {
            // cosh(x+y) = cosh x cosh y + sinh x sinh y
            HyperFn::Cosh => (ch, sh),
            // sinh(x+y) = sinh x cosh y + cosh x sinh y
            HyperFn::Sinh => (sh, ch),
        };
        Ok((finite(self.coef * alpha)?, finite(self.coef * beta)?))
    }
}

/// Reduces any number of shifted cosh/sinh terms sharing a frequency to a
/// single `α cosh ωt + β sinh ωt`.
pub fn reduce_shifted_terms(terms: &[ShiftedTerm], omega: f64) -> Result<HyperbolicSignal, HyperError> {
    let mut alpha = 0.0;
    let mut beta = 0.0;
    for term in terms {
        let (da, db) = term.basis_coefficients()?;
        alpha += da;
        beta += db;
    }
    Ok(HyperbolicSignal::new(finite(alpha)?, finite(beta)?, omega))
}

/// Reduces `a·f(ωt + φ) + b·g(ωt + ψ)` to `α cosh ωt + β sinh ωt`.
///
/// * cosh + sinh: `α = a cosh φ + b sinh ψ`, `β = a sinh φ + b cosh ψ`
/// * cosh + cosh: `α = a cosh φ + b cosh ψ`, `β = a sinh φ + b sinh ψ`
/// * sinh + sinh: `α = a sinh φ + b sinh ψ`, `β = a cosh φ + b cosh ψ`
pub fn hyper_reduce_shifted(
    a: f64,
    phi: f64,
    f: HyperFn,
    b: f64,
    psi: f64,
    g: HyperFn,
    omega: f64,
) -> Result<HyperbolicSignal, HyperError> {
    reduce_shifted_terms(&[ShiftedTerm::new(a, phi, f), ShiftedTerm::new(b, psi, g)], omega)
}

/// Polar form obtained by writing `(a + jb)·e^{jγ}` as `r·e^{jθ}` in the
/// split-complex plane: `r = |a + jb|·e^{γ.im}` and
/// `θ = arctanh(b/a) + γ.re`, so that
/// `e^{γ.im}·(a cosh γ.re + b sinh γ.re) = r cosh θ`.
///
/// Only the `a > |b|` sector is covered; elsewhere use [`hyper_canonicalize`].
pub fn split_complex_canonicalize(a: f64, b: f64, gamma: SplitComplex) -> Result<(f64, f64), HyperError> {
    if a.is_nan() || a <= b.abs() {
        return Err(HyperError::OutsideDerivationDomain { a, b });
    }
    let r = finite(SplitComplex::new(a, b).minkowski_modulus() * gamma.im.exp())?;
    let theta = (b / a).atanh() + gamma.re;
    Ok((r, theta))
}

/// Area of the parallelogram spanned by `(cosh u, sinh u)` and `(−b, a)`,
/// which for positive `a, b, u` is `a cosh u + b sinh u`.
pub fn parallelogram_area(a: f64, b: f64, u: f64) -> Result<f64, HyperError> {
    if !(a > 0.0 && b > 0.0 && u > 0.0) {
        return Err(HyperError::DomainError("parallelogram area requires a, b, u > 0"));
    }
    let [x, y, z] = cross([u.cosh(), u.sinh(), 0.0], [-b, a, 0.0]);
    finite(x.hypot(y).hypot(z))
}

fn cross(p: [f64; 3], q: [f64; 3]) -> [f64; 3] {
    [p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]]
}
