//! Same-frequency sums of circular sinusoids folded into a single cosine.

use std::f64::consts::{PI, TAU};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PhasorError {
    #[error("the argument of the origin is undefined")]
    UndefinedArgument,
    #[error("phasors have different frequencies ({0} vs {1})")]
    FrequencyMismatch(f64, f64),
    #[error("a·cos + b·sin with a = b = 0 has no canonical form")]
    ZeroSignal,
}

/// Principal argument of `x + iy`, the unique angle in `[−π, π)` whose
/// cosine and sine are `x/r` and `y/r`.
///
/// Differs from `atan2` on the negative real axis: this returns `−π` there.
pub fn principal_arg(x: f64, y: f64) -> Result<f64, PhasorError> {
    if x == 0.0 && y == 0.0 {
        return Err(PhasorError::UndefinedArgument);
    }
    let angle = y.atan2(x);
    Ok(if angle >= PI { -PI } else { angle })
}

/// Reduces a phase into `[−π, π)`. Phases already in range are returned
/// unchanged.
pub fn wrap_phase(phase: f64) -> f64 {
    if (-PI..PI).contains(&phase) {
        return phase;
    }
    let wrapped = phase - TAU * ((phase + PI) / TAU).floor();
    if wrapped >= PI {
        wrapped - TAU
    } else if wrapped < -PI {
        wrapped + TAU
    } else {
        wrapped
    }
}

/// `amplitude · cos(omega·t + phase)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircularPhasor {
    pub amplitude: f64,
    pub phase: f64,
    pub omega: f64,
}

impl CircularPhasor {
    pub fn new(amplitude: f64, phase: f64, omega: f64) -> Self {
        CircularPhasor { amplitude, phase, omega }
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.amplitude * (self.omega * t + self.phase).cos()
    }

    /// The same signal with a nonnegative amplitude and a phase in `[−π, π)`.
    pub fn canonical(&self) -> CanonicalCircular {
        if self.amplitude == 0.0 {
            return CanonicalCircular::zero(self.omega);
        }
        let (magnitude, phase) =
            if self.amplitude > 0.0 { (self.amplitude, self.phase) } else { (-self.amplitude, self.phase + PI) };
        CanonicalCircular { magnitude, phase: wrap_phase(phase), omega: self.omega }
    }
}

/// `magnitude · cos(omega·t + phase)` with `magnitude ≥ 0` and
/// `phase ∈ [−π, π)`; the zero signal has phase 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalCircular {
    pub magnitude: f64,
    pub phase: f64,
    pub omega: f64,
}

impl CanonicalCircular {
    pub fn zero(omega: f64) -> Self {
        CanonicalCircular { magnitude: 0.0, phase: 0.0, omega }
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.magnitude * (self.omega * t + self.phase).cos()
    }

    /// The same signal written as `magnitude · sin(omega·t + phase')`.
    pub fn to_sine(&self) -> SineForm {
        let phase = if self.magnitude == 0.0 { 0.0 } else { wrap_phase(self.phase + PI / 2.0) };
        SineForm { magnitude: self.magnitude, phase, omega: self.omega }
    }

    fn from_components(x: f64, y: f64, omega: f64) -> Self {
        match principal_arg(x, y) {
            Ok(phase) => CanonicalCircular { magnitude: x.hypot(y), phase, omega },
            Err(_) => CanonicalCircular::zero(omega),
        }
    }
}

/// `magnitude · sin(omega·t + phase)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SineForm {
    pub magnitude: f64,
    pub phase: f64,
    pub omega: f64,
}

impl SineForm {
    pub fn eval(&self, t: f64) -> f64 {
        self.magnitude * (self.omega * t + self.phase).sin()
    }
}

/// Adds two same-frequency phasors.
///
/// The magnitude is the length of the summed phasor `a e^{iφ} + b e^{iψ}`,
/// which by the law of cosines equals `√(a² + b² + 2ab cos(φ − ψ))`; it is
/// evaluated from the summed components so that near-cancelling inputs keep
/// full accuracy. A sum of exactly zero gives magnitude 0 and phase 0.
pub fn phasor_add(p: &CircularPhasor, q: &CircularPhasor) -> Result<CanonicalCircular, PhasorError> {
    if p.omega != q.omega {
        return Err(PhasorError::FrequencyMismatch(p.omega, q.omega));
    }
    let x = p.amplitude * p.phase.cos() + q.amplitude * q.phase.cos();
    let y = p.amplitude * p.phase.sin() + q.amplitude * q.phase.sin();
    Ok(CanonicalCircular::from_components(x, y, p.omega))
}

/// Folds any number of same-frequency phasors. An empty slice has no
/// frequency and is rejected as [`PhasorError::ZeroSignal`].
pub fn phasor_sum(terms: &[CircularPhasor]) -> Result<CanonicalCircular, PhasorError> {
    let (first, rest) = terms.split_first().ok_or(PhasorError::ZeroSignal)?;
    let mut acc = first.canonical();
    for q in rest {
        let p = CircularPhasor::new(acc.magnitude, acc.phase, acc.omega);
        acc = phasor_add(&p, q)?;
    }
    Ok(acc)
}

/// Both single-term forms of `a·cos(ωt) + b·sin(ωt)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosSinForms {
    /// `√(a²+b²) · cos(ωt + arg(a − ib))`
    pub cosine: CanonicalCircular,
    /// `√(a²+b²) · sin(ωt + arg(b + ia))`
    pub sine: SineForm,
}

pub fn combine_cos_sin(a: f64, b: f64, omega: f64) -> Result<CosSinForms, PhasorError> {
    if a == 0.0 && b == 0.0 {
        return Err(PhasorError::ZeroSignal);
    }
    let magnitude = a.hypot(b);
    Ok(CosSinForms {
        cosine: CanonicalCircular { magnitude, phase: principal_arg(a, -b)?, omega },
        sine: SineForm { magnitude, phase: principal_arg(b, a)?, omega },
    })
}
