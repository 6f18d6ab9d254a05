use std::f64::consts::FRAC_PI_2;

use crate::algebra::{classify_vector_with_tolerance, CausalClass};
use crate::euclid::{phasor_sum, CircularPhasor};
use crate::hyper::{
    hyper_canonicalize_snapped, reduce_shifted_terms, HyperFn, HyperKind, HyperbolicSignal, ShiftedTerm,
};

use super::{ExprError, ExprSum, Family, Func, Term};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SimplifyOptions {
    /// Emit circular groups as `c·sin(ωt + α)` instead of `c·cos(ωt + θ)`.
    pub sine_form: bool,
    /// Relative light-cone band for snapping hyperbolic groups onto the
    /// exponential cases; 0 disables snapping.
    pub eps: f64,
}

/// Terms sharing a family and a frequency `omega ≥ 0`. Terms are rewritten
/// to nonnegative frequency, except `exp` terms, whose sign selects growth
/// or decay.
#[derive(Debug, Clone, PartialEq)]
pub struct TermGroup {
    pub family: Family,
    pub omega: f64,
    pub terms: Vec<Term>,
}

/// Rewrites a term with negative frequency using the parity of its function.
fn with_nonnegative_freq(term: &Term) -> Term {
    if term.func == Func::Exp || term.freq >= 0.0 {
        return *term;
    }
    let coef = match term.func {
        // even: f(−x) = f(x)
        Func::Cos | Func::Cosh => term.coef,
        // odd: f(−x) = −f(x)
        Func::Sin | Func::Sinh | Func::Exp => -term.coef,
    };
    Term::new(coef, term.func, -term.freq, -term.phase)
}

/// Splits a sum into groups ordered by ascending frequency, circular before
/// hyperbolic at equal frequency. Frequencies are compared exactly.
pub fn group_terms(e: &ExprSum) -> Vec<TermGroup> {
    let mut groups: Vec<TermGroup> = Vec::new();
    for term in &e.terms {
        let term = with_nonnegative_freq(term);
        let family = term.func.family();
        let omega = term.freq.abs();
        match groups.iter_mut().find(|g| g.family == family && g.omega == omega) {
            Some(g) => g.terms.push(term),
            None => groups.push(TermGroup { family, omega, terms: vec![term] }),
        }
    }
    groups.sort_by(|a, b| a.omega.total_cmp(&b.omega).then(a.family.cmp(&b.family)));
    groups
}

fn circular_phasor(term: &Term, target: Func) -> CircularPhasor {
    // sin x = cos(x − π/2)
    let phase = match (term.func, target) {
        (Func::Sin, Func::Cos) => term.phase - FRAC_PI_2,
        (Func::Cos, Func::Sin) => term.phase + FRAC_PI_2,
        _ => term.phase,
    };
    CircularPhasor::new(term.coef, phase, term.freq)
}

fn simplify_circular(group: &TermGroup, options: &SimplifyOptions) -> Result<Term, ExprError> {
    if group.omega == 0.0 {
        let value: f64 = group.terms.iter().map(|t| t.eval(0.0)).sum();
        return Ok(Term::constant(value));
    }
    let target = if options.sine_form { Func::Sin } else { Func::Cos };
    if let [only] = group.terms.as_slice() {
        let c = circular_phasor(only, target).canonical();
        return Ok(Term::new(c.magnitude, target, c.omega, c.phase));
    }
    let phasors: Vec<_> = group.terms.iter().map(|t| circular_phasor(t, Func::Cos)).collect();
    let sum = phasor_sum(&phasors).map_err(|_| ExprError::Overflow)?;
    if !sum.magnitude.is_finite() {
        return Err(ExprError::Overflow);
    }
    Ok(if options.sine_form {
        let s = sum.to_sine();
        Term::new(s.magnitude, Func::Sin, s.omega, s.phase)
    } else {
        Term::new(sum.magnitude, Func::Cos, sum.omega, sum.phase)
    })
}

fn hyperbolic_signal(group: &TermGroup) -> Result<HyperbolicSignal, ExprError> {
    let mut shifted = Vec::with_capacity(group.terms.len());
    let (mut alpha, mut beta) = (0.0, 0.0);
    for term in &group.terms {
        match term.func {
            Func::Cosh => shifted.push(ShiftedTerm::new(term.coef, term.phase, HyperFn::Cosh)),
            Func::Sinh => shifted.push(ShiftedTerm::new(term.coef, term.phase, HyperFn::Sinh)),
            Func::Exp => {
                let k = if term.phase == 0.0 { term.coef } else { term.coef * term.phase.exp() };
                alpha += k;
                beta += if term.freq < 0.0 { -k } else { k };
            }
            Func::Cos | Func::Sin => unreachable!("circular term in hyperbolic group"),
        }
    }
    let reduced = reduce_shifted_terms(&shifted, group.omega).map_err(|_| ExprError::Overflow)?;
    let signal = HyperbolicSignal::new(reduced.a + alpha, reduced.b + beta, group.omega);
    if signal.a.is_finite() && signal.b.is_finite() {
        Ok(signal)
    } else {
        Err(ExprError::Overflow)
    }
}

/// A single cosh/sinh term with nonzero coefficient, or an `exp` term with
/// no phase, is already in canonical form.
fn is_canonical_hyperbolic(term: &Term) -> bool {
    match term.func {
        Func::Cosh | Func::Sinh => term.coef != 0.0,
        Func::Exp => term.phase == 0.0,
        Func::Cos | Func::Sin => false,
    }
}

fn simplify_hyperbolic(group: &TermGroup, options: &SimplifyOptions) -> Result<Term, ExprError> {
    let signal = hyperbolic_signal(group)?;
    if let [only] = group.terms.as_slice() {
        let snaps = options.eps > 0.0
            && classify_vector_with_tolerance(signal.a, signal.b, options.eps) == CausalClass::Lightlike;
        if is_canonical_hyperbolic(only) && !snaps {
            return Ok(*only);
        }
    }
    let c = hyper_canonicalize_snapped(&signal, options.eps);
    let omega = group.omega;
    Ok(match c.kind {
        HyperKind::PosCosh | HyperKind::NegCosh => Term::new(c.signed_amplitude(), Func::Cosh, omega, c.shift),
        HyperKind::PosSinh | HyperKind::NegSinh => Term::new(c.signed_amplitude(), Func::Sinh, omega, c.shift),
        HyperKind::ExpPlus => Term::new(c.amplitude, Func::Exp, omega, 0.0),
        HyperKind::ExpMinus => Term::new(c.amplitude, Func::Exp, -omega, 0.0),
    })
}

/// One canonical term per (family, frequency) group, in ascending frequency.
///
/// Circular groups are folded with the phasor addition formula; hyperbolic
/// groups are reduced to `α cosh ωt + β sinh ωt` and rewritten as a single
/// shifted cosh, shifted sinh or exponential. Groups that already consist of
/// one canonical term are returned unchanged, so the operation is idempotent.
pub fn simplify(e: &ExprSum, options: &SimplifyOptions) -> Result<ExprSum, ExprError> {
    let terms = group_terms(e)
        .iter()
        .map(|g| match g.family {
            Family::Circular => simplify_circular(g, options),
            Family::Hyperbolic => simplify_hyperbolic(g, options),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ExprSum::new(terms))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupClass {
    pub omega: f64,
    /// Reduced `α cosh ωt + β sinh ωt` coefficients.
    pub signal: HyperbolicSignal,
    pub class: CausalClass,
}

/// Causal class of the reduced coefficient vector of every hyperbolic group.
pub fn classify_groups(e: &ExprSum, eps: f64) -> Result<Vec<GroupClass>, ExprError> {
    group_terms(e)
        .iter()
        .filter(|g| g.family == Family::Hyperbolic)
        .map(|g| {
            let signal = hyperbolic_signal(g)?;
            Ok(GroupClass { omega: g.omega, signal, class: classify_vector_with_tolerance(signal.a, signal.b, eps) })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse, render, RenderOptions};
    use proptest::prelude::*;

    fn simplified(input: &str) -> String {
        let e = parse(input).unwrap();
        render(&simplify(&e, &SimplifyOptions::default()).unwrap(), &RenderOptions::default())
    }

    #[test]
    fn named_simplifications() {
        assert_eq!(simplified("cos(t)+sin(t)"), "1.4142135624*cos(t-0.7853981634)");
        assert_eq!(simplified("5*cosh(t)+3*sinh(t)"), "4*cosh(t+0.6931471806)");
        assert_eq!(simplified("3*cosh(t)+5*sinh(t)"), "4*sinh(t+0.6931471806)");
        assert_eq!(simplified("cosh(t)+sinh(t)"), "exp(t)");
        assert_eq!(simplified("2*cosh(3*t)-2*sinh(3*t)"), "2*exp(-3*t)");
        assert_eq!(simplified("cos(t)+cosh(t)"), "cos(t) + cosh(t)");
    }

    #[test]
    fn sine_form() {
        let e = parse("cos(t)+sin(t)").unwrap();
        let s = simplify(&e, &SimplifyOptions { sine_form: true, eps: 0.0 }).unwrap();
        assert_eq!(render(&s, &RenderOptions::default()), "1.4142135624*sin(t+0.7853981634)");
    }

    #[test]
    fn groups_sorted_by_frequency() {
        assert_eq!(
            simplified("cosh(2*t) + sin(2*t) + 3 + cos(t) + 1"),
            "4 + cos(t) + cos(2*t-1.5707963268) + cosh(2*t)"
        );
    }

    #[test]
    fn negative_frequencies_join_their_group() {
        assert_eq!(simplified("cos(-t) - cos(t)"), "0*cos(t)");
        assert_eq!(simplified("sinh(-t) + sinh(t) + exp(-t)"), "exp(-t)");
        assert_eq!(simplified("cosh(-2*t+1)"), "cosh(2*t-1)");
    }

    #[test]
    fn cancelling_hyperbolic_group() {
        assert_eq!(simplified("cosh(t) - cosh(t)"), "0*exp(t)");
    }

    #[test]
    fn snapping_is_opt_in() {
        let e = parse("cosh(t) + 1.0000000001*sinh(t)").unwrap();
        let exact = simplify(&e, &SimplifyOptions::default()).unwrap();
        assert_eq!(exact.terms[0].func, Func::Sinh);
        let snapped = simplify(&e, &SimplifyOptions { sine_form: false, eps: 1e-6 }).unwrap();
        assert_eq!(snapped.terms[0].func, Func::Exp);
        assert!(snapped.terms[0].freq > 0.0);
    }

    #[test]
    fn classification_per_group() {
        let e = parse("5*cosh(t)+3*sinh(t) + sinh(2*t) + exp(-3*t) + cos(t)").unwrap();
        let classes: Vec<_> = classify_groups(&e, 0.0).unwrap().iter().map(|g| (g.omega, g.class)).collect();
        assert_eq!(
            classes,
            vec![(1.0, CausalClass::Spacelike), (2.0, CausalClass::Timelike), (3.0, CausalClass::Lightlike)]
        );
    }

    #[test]
    fn overflowing_shift() {
        let e = parse("cosh(t+800) + sinh(t)").unwrap();
        assert_eq!(simplify(&e, &SimplifyOptions::default()), Err(ExprError::Overflow));
    }

    fn arb_term() -> impl Strategy<Value = Term> {
        (
            -10.0..10.0f64,
            prop_oneof![Just(Func::Cos), Just(Func::Sin), Just(Func::Cosh), Just(Func::Sinh), Just(Func::Exp)],
            prop_oneof![Just(0.5), Just(1.0), Just(2.0), Just(-1.0)],
            -3.0..3.0f64,
        )
            .prop_map(|(coef, func, freq, phase)| Term::new(coef, func, freq, phase))
    }

    proptest! {
        #[test]
        fn idempotent(terms in proptest::collection::vec(arb_term(), 1..7), sine in any::<bool>()) {
            let opts = SimplifyOptions { sine_form: sine, eps: 0.0 };
            let once = simplify(&ExprSum::new(terms), &opts).unwrap();
            let twice = simplify(&once, &opts).unwrap();
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn one_term_per_group(terms in proptest::collection::vec(arb_term(), 1..7)) {
            let e = ExprSum::new(terms);
            let groups = group_terms(&e).len();
            prop_assert_eq!(simplify(&e, &SimplifyOptions::default()).unwrap().terms.len(), groups);
        }

        #[test]
        fn pointwise_sound(terms in proptest::collection::vec(arb_term(), 1..7), sine in any::<bool>()) {
            let e = ExprSum::new(terms);
            let s = simplify(&e, &SimplifyOptions { sine_form: sine, eps: 0.0 }).unwrap();
            for i in 0..101 {
                let t = -5.0 + 0.1 * i as f64;
                let want = e.eval(t).unwrap();
                let got = s.eval(t).unwrap();
                let scale: f64 = e.terms.iter().map(|term| term.eval(t).abs()).sum();
                prop_assert!((got - want).abs() <= 1e-9 * (1.0 + scale), "t={t}: {got} vs {want}");
            }
        }
    }
}
