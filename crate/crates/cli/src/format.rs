//! Number formatting shared by the text and JSON reports.

/// Significant digits used for every printed float.
pub const SIGNIFICANT_DIGITS: usize = 15;

/// Formats `x` with [`SIGNIFICANT_DIGITS`] significant digits, in positional
/// notation for magnitudes in `[1e-6, 1e15)` and scientific otherwise.
pub fn float(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-6..15).contains(&magnitude) {
        return format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    }
    let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding can carry into a new leading digit
    if significant(&s) > SIGNIFICANT_DIGITS && decimals > 0 {
        return format!("{:.*}", decimals - 1, x);
    }
    s
}

fn significant(s: &str) -> usize {
    s.chars()
        .filter(char::is_ascii_digit)
        .skip_while(|c| *c == '0')
        .count()
}

/// `x` rounded to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn rounded(x: f64) -> f64 {
    float(x).parse().unwrap_or(x)
}
