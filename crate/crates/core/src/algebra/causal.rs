use std::fmt;

/// Sign class of the Minkowski form `ν(a, b) = a² − b²` of signature (1, −1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CausalClass {
    /// a² − b² < 0
    Timelike,
    /// a² − b² > 0
    Spacelike,
    /// a² − b² = 0
    Lightlike,
}

impl fmt::Display for CausalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CausalClass::Timelike => "Timelike",
            CausalClass::Spacelike => "Spacelike",
            CausalClass::Lightlike => "Lightlike",
        };
        f.write_str(name)
    }
}

/// Classifies the vector `(a, b)` by the sign of `a² − b²`, compared exactly.
///
/// The comparison is done on `|a|` against `|b|`, which has the same sign as
/// `a² − b²` but cannot overflow or underflow.
pub fn classify_vector(a: f64, b: f64) -> CausalClass {
    let (a, b) = (a.abs(), b.abs());
    if a > b {
        CausalClass::Spacelike
    } else if a < b {
        CausalClass::Timelike
    } else {
        CausalClass::Lightlike
    }
}

/// Classification with a relative light-cone band: vectors with
/// `|a² − b²| ≤ eps·(a² + b²)` are reported as lightlike.
///
/// `eps = 0` is exactly [`classify_vector`].
pub fn classify_vector_with_tolerance(a: f64, b: f64, eps: f64) -> CausalClass {
    if eps > 0.0 && near_light_cone(a, b, eps) {
        return CausalClass::Lightlike;
    }
    classify_vector(a, b)
}

pub(crate) fn near_light_cone(a: f64, b: f64, eps: f64) -> bool {
    let form = ((a - b) * (a + b)).abs();
    form <= eps * (a * a + b * b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(classify_vector(5.0, 3.0), CausalClass::Spacelike);
        assert_eq!(classify_vector(3.0, 5.0), CausalClass::Timelike);
        assert_eq!(classify_vector(2.0, -2.0), CausalClass::Lightlike);
        assert_eq!(classify_vector(0.0, 0.0), CausalClass::Lightlike);
    }

    #[test]
    fn no_overflow_for_huge_components() {
        assert_eq!(classify_vector(1e200, 1e199), CausalClass::Spacelike);
        assert_eq!(classify_vector(1e-200, 1e-199), CausalClass::Timelike);
    }

    #[test]
    fn tolerance_band_snaps_near_cone() {
        assert_eq!(classify_vector_with_tolerance(1.0, 1.0 + 1e-12, 0.0), CausalClass::Timelike);
        assert_eq!(classify_vector_with_tolerance(1.0, 1.0 + 1e-12, 1e-9), CausalClass::Lightlike);
        assert_eq!(classify_vector_with_tolerance(5.0, 3.0, 1e-9), CausalClass::Spacelike);
    }

    proptest! {
        #[test]
        fn depends_only_on_squares(a in -1e3..1e3f64, b in -1e3..1e3f64) {
            let c = classify_vector(a, b);
            prop_assert_eq!(c, classify_vector(-a, -b));
            prop_assert_eq!(c, classify_vector(a, -b));
        }

        #[test]
        fn agrees_with_form_sign(a in -1e3..1e3f64, b in -1e3..1e3f64) {
            let form = a * a - b * b;
            let expected = if form > 0.0 {
                CausalClass::Spacelike
            } else if form < 0.0 {
                CausalClass::Timelike
            } else {
                CausalClass::Lightlike
            };
            // Rounding in a² − b² can only blur the sign when |a| and |b| agree
            // to within an ulp.
            if (a.abs() - b.abs()).abs() > 1e-9 * a.abs().max(b.abs()) {
                prop_assert_eq!(classify_vector(a, b), expected);
            }
        }
    }
}
