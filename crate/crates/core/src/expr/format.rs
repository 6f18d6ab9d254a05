//! Number formatting shared by the renderer and the CSV writer. Every string
//! produced here is a valid literal for the expression lexer.

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn scientific(x: f64, mantissa_decimals: usize) -> String {
    let s = format!("{:.*e}", mantissa_decimals, x);
    match s.split_once('e') {
        Some((mantissa, exp)) => format!("{}e{}", trim_fraction(mantissa), exp),
        None => s,
    }
}

/// `x` with at most `decimals` fractional digits, trailing zeros trimmed.
///
/// Magnitudes below `1e-4` or at least `1e16` switch to scientific notation
/// with `decimals` mantissa digits so small coefficients are not rounded
/// away.
pub fn format_decimal(x: f64, decimals: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let mag = x.abs();
    if !(1e-4..1e16).contains(&mag) {
        return scientific(x, decimals);
    }
    let fixed = format!("{:.*}", decimals, x);
    let trimmed = trim_fraction(&fixed);
    if trimmed == "0" || trimmed == "-0" {
        scientific(x, decimals)
    } else {
        trimmed.to_string()
    }
}

/// `x` with `digits` significant digits in the style of C's `%.{digits}g`:
/// fixed notation for decimal exponents in `[-5, digits)`, scientific
/// otherwise, trailing zeros trimmed.
pub fn format_significant(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let exp: i32 = sci.split_once('e').and_then(|(_, e)| e.parse().ok()).unwrap_or(0);
    if exp < -5 || exp >= digits as i32 {
        scientific(x, digits - 1)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_fraction(&format!("{:.*}", decimals, x)).to_string()
    }
}

/// The shortest text that parses back to exactly `x`, with an exponent for
/// very large or very small magnitudes.
pub fn format_shortest(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let s = format!("{x:?}");
    match s.strip_suffix(".0") {
        Some(integral) => integral.to_string(),
        None => s,
    }
}
