use super::format::{format_decimal, format_shortest};
use super::{ExprSum, Term};

pub const DEFAULT_PRECISION: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    /// Fractional digits for every printed number; `None` prints the
    /// shortest text that parses back to the same value.
    pub precision: Option<usize>,
}

impl RenderOptions {
    pub fn exact() -> Self {
        RenderOptions { precision: None }
    }

    pub fn with_precision(precision: usize) -> Self {
        RenderOptions { precision: Some(precision) }
    }
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions::with_precision(DEFAULT_PRECISION)
    }
}

fn render_term(term: &Term, precision: Option<usize>) -> String {
    let num = |x: f64| match precision {
        Some(p) => format_decimal(x, p),
        None => format_shortest(x),
    };
    if term.is_constant() {
        return num(term.coef);
    }
    let mut out = String::new();
    if term.coef == 1.0 {
    } else if term.coef == -1.0 {
        out.push('-');
    } else {
        out.push_str(&num(term.coef));
        out.push('*');
    }
    out.push_str(term.func.name());
    out.push('(');
    if term.freq == 1.0 {
        out.push('t');
    } else if term.freq == -1.0 {
        out.push_str("-t");
    } else {
        out.push_str(&num(term.freq));
        out.push_str("*t");
    }
    if term.phase != 0.0 {
        let phase = num(term.phase);
        match phase.strip_prefix('-') {
            Some(abs) => {
                out.push('-');
                out.push_str(abs);
            }
            None => {
                out.push('+');
                out.push_str(&phase);
            }
        }
    }
    out.push(')');
    out
}

/// Renders a sum in the expression grammar; `parse(render(e))` reproduces
/// `e` up to the printed precision, and exactly with [`RenderOptions::exact`].
pub fn render(e: &ExprSum, options: &RenderOptions) -> String {
    let mut out = String::new();
    for (i, term) in e.terms.iter().enumerate() {
        let text = render_term(term, options.precision);
        if i == 0 {
            out.push_str(&text);
            continue;
        }
        match text.strip_prefix('-') {
            Some(rest) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            None => {
                out.push_str(" + ");
                out.push_str(&text);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse, Func};
    use std::f64::consts::FRAC_PI_4;

    fn one(term: Term) -> String {
        render(&ExprSum::new(vec![term]), &RenderOptions::default())
    }

    #[test]
    fn unit_elision() {
        assert_eq!(one(Term::new(1.0, Func::Cos, 1.0, 0.0)), "cos(t)");
        assert_eq!(one(Term::new(-1.0, Func::Exp, -1.0, 0.0)), "-exp(-t)");
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn signed_coefficients_and_phases() {
        assert_eq!(one(Term::new(-2.0, Func::Sinh, 3.0, 0.5)), "-2*sinh(3*t+0.5)");
        assert_eq!(one(Term::new(1.4142135624, Func::Cos, 1.0, -0.7853981634)), "1.4142135624*cos(t-0.7853981634)");
        assert_eq!(one(Term::new(2.0, Func::Cos, 2.0, -FRAC_PI_4)), "2*cos(2*t-0.7853981634)");
        assert_eq!(one(Term::new(0.5, Func::Exp, -2.0, 0.0)), "0.5*exp(-2*t)");
    }

    #[test]
    fn constants_and_sums() {
        assert_eq!(one(Term::constant(-3.0)), "-3");
        let e = ExprSum::new(vec![
            Term::new(1.0, Func::Cos, 1.0, 0.0),
            Term::new(-2.0, Func::Sin, 1.0, 0.0),
            Term::constant(4.0),
            Term::new(0.0, Func::Cosh, 0.0, 1.0),
        ]);
        let text = render(&e, &RenderOptions::default());
        assert_eq!(text, "cos(t) - 2*sin(t) + 4 + 0*cosh(0*t+1)");
        assert_eq!(parse(&text).unwrap(), e);
    }

    #[test]
    fn precision_is_configurable() {
        let e = ExprSum::new(vec![Term::new(1.0 / 3.0, Func::Cos, 1.0, 0.0)]);
        assert_eq!(render(&e, &RenderOptions::with_precision(3)), "0.333*cos(t)");
        let small =
            ExprSum::new(vec![Term::new(0.048633128667390223, Func::Exp, 2.0, 0.0), Term::constant(-1e-9 / 3.0)]);
        for e in [e, small] {
            let exact = render(&e, &RenderOptions::exact());
            assert_eq!(parse(&exact).unwrap(), e, "{exact}");
        }
    }
}
