//! Closed-form trajectories of `m·x″ + k·x = 0`, the equation of motion for
//! the quadratic potential `V(x) = ½kx²`.

use thiserror::Error;

use crate::euclid::{combine_cos_sin, CanonicalCircular};
use crate::hyper::{hyper_canonicalize, CanonicalHyperbolic, HyperError, HyperbolicSignal};

/// Default step for the second-difference residual.
pub const RESIDUAL_STEP: f64 = 1e-4;
/// Default step for the first-difference velocity estimate.
pub const VELOCITY_STEP: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OscillatorError {
    #[error("mass must be positive and finite, got {0}")]
    InvalidMass(f64),
    #[error("stiffness and initial conditions must be finite")]
    NonFinite,
    #[error("finite-difference step must be positive, got {0}")]
    InvalidStep(f64),
    #[error("trajectory exceeds the floating-point range")]
    Overflow,
}

impl From<HyperError> for OscillatorError {
    fn from(_: HyperError) -> Self {
        OscillatorError::Overflow
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorProblem {
    pub mass: f64,
    pub stiffness: f64,
    pub x0: f64,
    pub v0: f64,
}

impl OscillatorProblem {
    pub fn new(mass: f64, stiffness: f64, x0: f64, v0: f64) -> Result<Self, OscillatorError> {
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(OscillatorError::InvalidMass(mass));
        }
        if !(stiffness.is_finite() && x0.is_finite() && v0.is_finite()) {
            return Err(OscillatorError::NonFinite);
        }
        Ok(OscillatorProblem { mass, stiffness, x0, v0 })
    }

    pub fn k_over_m(&self) -> f64 {
        self.stiffness / self.mass
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Branch {
    /// k > 0: `c·cos(ωt + θ)`
    Circular(CanonicalCircular),
    /// k < 0: one of the six hyperbolic single-term forms
    Hyperbolic(CanonicalHyperbolic),
    /// k = 0: `x0 + v0·t`
    Linear { x0: f64, v0: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MotionSolution {
    pub branch: Branch,
    /// Always ≥ 0; zero on the linear branch.
    pub omega: f64,
}

/// Builds the closed-form trajectory for the given initial data.
///
/// With `ω = √(|k|/m)` the position is `x0·cos ωt + (v0/ω)·sin ωt` for
/// `k > 0` and `x0·cosh ωt + (v0/ω)·sinh ωt` for `k < 0`, each folded into a
/// single term.
pub fn solve_oscillator(p: &OscillatorProblem) -> Result<MotionSolution, OscillatorError> {
    let p = OscillatorProblem::new(p.mass, p.stiffness, p.x0, p.v0)?;
    let k = p.stiffness;
    if k == 0.0 {
        return Ok(MotionSolution { branch: Branch::Linear { x0: p.x0, v0: p.v0 }, omega: 0.0 });
    }
    let omega = (k.abs() / p.mass).sqrt();
    let b = p.v0 / omega;
    if !b.is_finite() {
        return Err(OscillatorError::Overflow);
    }
    let branch = if k > 0.0 {
        match combine_cos_sin(p.x0, b, omega) {
            Ok(forms) => Branch::Circular(forms.cosine),
            // At rest in equilibrium.
            Err(_) => Branch::Circular(CanonicalCircular::zero(omega)),
        }
    } else {
        Branch::Hyperbolic(hyper_canonicalize(&HyperbolicSignal::new(p.x0, b, omega)))
    };
    Ok(MotionSolution { branch, omega })
}

impl MotionSolution {
    pub fn eval(&self, t: f64) -> Result<f64, OscillatorError> {
        let x = match &self.branch {
            Branch::Circular(c) => c.eval(t),
            Branch::Hyperbolic(h) => h.eval(t)?,
            Branch::Linear { x0, v0 } => x0 + v0 * t,
        };
        if x.is_finite() {
            Ok(x)
        } else {
            Err(OscillatorError::Overflow)
        }
    }

    /// Symmetric first difference `(x(t+h) − x(t−h)) / 2h`.
    pub fn velocity_estimate(&self, t: f64, h: f64) -> Result<f64, OscillatorError> {
        if h.is_nan() || h <= 0.0 {
            return Err(OscillatorError::InvalidStep(h));
        }
        Ok((self.eval(t + h)? - self.eval(t - h)?) / (2.0 * h))
    }
}

/// `|D²x(t) + (k/m)·x(t)|` with `D²` the symmetric second difference of
/// step `h`. Exact solutions give an `O(h²)` residual.
pub fn residual_check(s: &MotionSolution, k_over_m: f64, t: f64, h: f64) -> Result<f64, OscillatorError> {
    if h.is_nan() || h <= 0.0 {
        return Err(OscillatorError::InvalidStep(h));
    }
    let x = s.eval(t)?;
    let second = (s.eval(t + h)? - 2.0 * x + s.eval(t - h)?) / (h * h);
    Ok((second + k_over_m * x).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyper::HyperKind;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};

    fn solve(m: f64, k: f64, x0: f64, v0: f64) -> MotionSolution {
        solve_oscillator(&OscillatorProblem::new(m, k, x0, v0).unwrap()).unwrap()
    }

    #[test]
    fn pure_cosine() {
        let s = solve(1.0, 1.0, 1.0, 0.0);
        assert_eq!(s.omega, 1.0);
        assert_eq!(s.branch, Branch::Circular(CanonicalCircular { magnitude: 1.0, phase: 0.0, omega: 1.0 }));
    }

    #[test]
    fn pure_sinh() {
        let s = solve(1.0, -1.0, 0.0, 1.0);
        match s.branch {
            Branch::Hyperbolic(h) => {
                assert_eq!(h.kind, HyperKind::PosSinh);
                assert_eq!(h.amplitude, 1.0);
                assert_eq!(h.shift, 0.0);
                assert_eq!(h.omega, 1.0);
            }
            other => panic!("unexpected branch {other:?}"),
        }
    }

    #[test]
    fn stiff_spring_with_velocity() {
        let s = solve(1.0, 4.0, 1.0, 2.0);
        assert_eq!(s.omega, 2.0);
        match s.branch {
            Branch::Circular(c) => {
                assert!((c.magnitude - SQRT_2).abs() < 1e-15);
                assert!((c.phase + FRAC_PI_4).abs() < 1e-15);
            }
            other => panic!("unexpected branch {other:?}"),
        }
        assert!((s.eval(0.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((s.velocity_estimate(0.0, VELOCITY_STEP).unwrap() - 2.0).abs() < 1e-8);
    }

    #[test]
    fn equilibrium_at_rest() {
        let s = solve(2.0, 3.0, 0.0, 0.0);
        assert_eq!(s.eval(1.7).unwrap(), 0.0);
    }

    #[test]
    fn invalid_mass() {
        assert_eq!(OscillatorProblem::new(0.0, 1.0, 0.0, 0.0), Err(OscillatorError::InvalidMass(0.0)));
        assert!(OscillatorProblem::new(-1.0, 1.0, 0.0, 0.0).is_err());
        let raw = OscillatorProblem { mass: -2.0, stiffness: 1.0, x0: 0.0, v0: 0.0 };
        assert_eq!(solve_oscillator(&raw), Err(OscillatorError::InvalidMass(-2.0)));
    }

    #[test]
    fn evaluation_examples() {
        let lin = MotionSolution { branch: Branch::Linear { x0: 2.0, v0: 3.0 }, omega: 0.0 };
        assert_eq!(lin.eval(1.0).unwrap(), 5.0);
        let circ = solve(1.0, 1.0, 1.0, 0.0);
        assert_eq!(circ.eval(PI).unwrap(), -1.0);
        let hyp = solve(1.0, -1.0, 0.0, 1.0);
        assert_eq!(hyp.eval(0.0).unwrap(), 0.0);
        assert_eq!(hyp.eval(1e3), Err(OscillatorError::Overflow));
    }

    #[test]
    fn residual_examples() {
        let circ = solve(1.0, 1.0, 1.0, 0.0);
        assert!(residual_check(&circ, 1.0, 0.3, RESIDUAL_STEP).unwrap() <= 1e-6);
        let lin = solve(1.0, 0.0, 0.5, -2.0);
        assert!(residual_check(&lin, 0.0, 0.3, RESIDUAL_STEP).unwrap() <= 1e-8);
        let hyp = solve(1.0, -1.0, 0.0, 1.0);
        assert!(residual_check(&hyp, -1.0, 0.3, RESIDUAL_STEP).unwrap() <= 1e-6);
        assert_eq!(residual_check(&hyp, -1.0, 0.3, 0.0), Err(OscillatorError::InvalidStep(0.0)));
    }

    proptest! {
        #[test]
        fn branch_follows_sign_of_stiffness(m in 0.1..5.0f64, k in -10.0..10.0f64, x0 in -5.0..5.0f64, v0 in -5.0..5.0f64) {
            let s = solve(m, k, x0, v0);
            let ok = match s.branch {
                Branch::Circular(_) => k > 0.0,
                Branch::Hyperbolic(_) => k < 0.0,
                Branch::Linear { .. } => k == 0.0,
            };
            prop_assert!(ok);
            prop_assert!(s.omega >= 0.0);
        }

        #[test]
        fn superposition_for_positive_stiffness(
            m in 0.5..2.0f64, k in 0.1..10.0f64,
            x1 in -5.0..5.0f64, v1 in -5.0..5.0f64, x2 in -5.0..5.0f64, v2 in -5.0..5.0f64,
            t in -2.0..2.0f64,
        ) {
            let sum = solve(m, k, x1 + x2, v1 + v2).eval(t).unwrap();
            let parts = solve(m, k, x1, v1).eval(t).unwrap() + solve(m, k, x2, v2).eval(t).unwrap();
            prop_assert!((sum - parts).abs() <= 1e-10 * (1.0 + sum.abs()));
        }
    }
}
