//! Canonical single-term forms for sums of circular and hyperbolic
//! sinusoids.
//!
//! * [`algebra`]: split-complex numbers, causal classification and
//!   power-series exp/cosh/sinh over several unital algebras.
//! * [`euclid`]: phasor addition for `a·cos(ωt+φ) + b·cos(ωt+ψ)`.
//! * [`hyper`]: the hyperbolic analog, `a·cosh ωt + b·sinh ωt` as one
//!   shifted cosh, shifted sinh or exponential.
//! * [`oscillator`]: closed-form solutions of `m·x″ + k·x = 0`.
//! * [`expr`]: the textual expression language behind the `hyperphasor`
//!   binary.

pub mod algebra;
pub mod euclid;
pub mod expr;
pub mod hyper;
pub mod oscillator;
