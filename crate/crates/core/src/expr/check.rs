use super::format::format_significant;
use super::simplify::{simplify, SimplifyOptions};
use super::{ExprError, ExprSum};

/// `points` uniformly spaced samples on `[from, to]`, both ends included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub from: f64,
    pub to: f64,
    pub points: usize,
}

impl Grid {
    pub fn new(from: f64, to: f64, points: usize) -> Result<Self, ExprError> {
        if !from.is_finite() || !to.is_finite() {
            return Err(ExprError::Range(format!("bounds must be finite, got [{from}, {to}]")));
        }
        if from >= to {
            return Err(ExprError::Range(format!("need from < to, got [{from}, {to}]")));
        }
        if points < 2 {
            return Err(ExprError::Range(format!("need at least 2 points, got {points}")));
        }
        Ok(Grid { from, to, points })
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        let step = (self.to - self.from) / (self.points - 1) as f64;
        (0..self.points).map(move |i| if i + 1 == self.points { self.to } else { self.from + step * i as f64 })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub simplified: ExprSum,
    /// Grid points where both sides were finite and compared.
    pub points: usize,
    /// Grid points skipped because either side left the floating-point range.
    pub overflow_points: usize,
    pub max_abs: f64,
    /// Largest `|original − simplified| / (1 + |original|)`.
    pub max_rel: f64,
    pub tol: f64,
    pub passed: bool,
}

/// Simplifies `e` and compares both forms on `grid`.
///
/// Fails with [`ExprError::Overflow`] when no grid point could be compared.
pub fn check(e: &ExprSum, grid: &Grid, tol: f64, options: &SimplifyOptions) -> Result<CheckReport, ExprError> {
    if tol.is_nan() || tol < 0.0 {
        return Err(ExprError::Range(format!("tolerance must be nonnegative, got {tol}")));
    }
    let simplified = simplify(e, options)?;
    let (mut points, mut overflow_points) = (0, 0);
    let (mut max_abs, mut max_rel) = (0.0f64, 0.0f64);
    for t in grid.iter() {
        match (e.eval(t), simplified.eval(t)) {
            (Ok(o), Ok(s)) => {
                let diff = (o - s).abs();
                max_abs = max_abs.max(diff);
                max_rel = max_rel.max(diff / (1.0 + o.abs()));
                points += 1;
            }
            _ => overflow_points += 1,
        }
    }
    if points == 0 {
        return Err(ExprError::Overflow);
    }
    Ok(CheckReport { simplified, points, overflow_points, max_abs, max_rel, tol, passed: max_rel <= tol })
}

/// `(t, e(t))` on a uniform grid of `n` points over `[t0, t1]`.
pub fn sample(e: &ExprSum, t0: f64, t1: f64, n: usize) -> Result<Vec<(f64, f64)>, ExprError> {
    let grid = Grid::new(t0, t1, n)?;
    grid.iter().map(|t| Ok((t, e.eval(t)?))).collect()
}

/// CSV with header `t,value` and 17 significant digits per number.
pub fn samples_to_csv(samples: &[(f64, f64)]) -> String {
    let mut out = String::from("t,value\n");
    for &(t, v) in samples {
        out.push_str(&format_significant(t, 17));
        out.push(',');
        out.push_str(&format_significant(v, 17));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    #[test]
    fn grid_hits_both_ends() {
        let g = Grid::new(-10.0, 10.0, 101).unwrap();
        let ts: Vec<f64> = g.iter().collect();
        assert_eq!(ts.len(), 101);
        assert_eq!(ts[0], -10.0);
        assert_eq!(ts[100], 10.0);
        assert!((ts[50]).abs() < 1e-15);
    }

    #[test]
    fn invalid_grids() {
        assert!(matches!(Grid::new(1.0, 1.0, 10), Err(ExprError::Range(_))));
        assert!(matches!(Grid::new(0.0, 1.0, 1), Err(ExprError::Range(_))));
        assert!(matches!(Grid::new(0.0, f64::INFINITY, 5), Err(ExprError::Range(_))));
    }

    #[test]
    fn check_passes_on_named_expressions() {
        let grid = Grid::new(-10.0, 10.0, 101).unwrap();
        for input in ["cos(t)+sin(t)", "5*cosh(t)+3*sinh(t)", "cosh(t)+sinh(t)", "cos(t)+cosh(t)"] {
            let r = check(&parse(input).unwrap(), &grid, 1e-9, &SimplifyOptions::default()).unwrap();
            assert!(r.passed, "{input}: {r:?}");
            assert_eq!(r.points, 101);
        }
    }

    #[test]
    fn overflowing_points_are_skipped() {
        let grid = Grid::new(0.0, 1000.0, 11).unwrap();
        let r = check(&parse("cosh(t)").unwrap(), &grid, 1e-9, &SimplifyOptions::default()).unwrap();
        assert_eq!(r.points + r.overflow_points, 11);
        assert!(r.overflow_points > 0);
        let grid = Grid::new(900.0, 1000.0, 3).unwrap();
        assert_eq!(
            check(&parse("cosh(t)").unwrap(), &grid, 1e-9, &SimplifyOptions::default()),
            Err(ExprError::Overflow)
        );
    }

    #[test]
    fn snapping_can_fail_the_check() {
        let grid = Grid::new(-10.0, 10.0, 101).unwrap();
        let e = parse("cosh(t) + 1.001*sinh(t)").unwrap();
        let r = check(&e, &grid, 1e-9, &SimplifyOptions { sine_form: false, eps: 1e-2 }).unwrap();
        assert!(!r.passed);
    }

    #[test]
    fn csv_output() {
        let s = sample(&parse("2*cos(t)").unwrap(), 0.0, 1.0, 3).unwrap();
        let csv = samples_to_csv(&s);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("t,value"));
        assert_eq!(lines.next(), Some("0,2"));
        assert_eq!(lines.next(), Some("0.5,1.7551651237807455"));
        let last: Vec<f64> = lines.next().unwrap().split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(last, vec![1.0, 2.0 * 1.0f64.cos()]);
    }

    #[test]
    fn sample_reports_overflow() {
        assert_eq!(sample(&parse("exp(t)").unwrap(), 0.0, 1000.0, 3), Err(ExprError::Overflow));
    }
}
