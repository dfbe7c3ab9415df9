//! Locale-independent number formatting for reports and CSV output.

/// Plain decimal rendering of `x` with `digits` significant digits.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    assert!(digits > 0);
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return format!("{:.*}", digits - 1, 0.0);
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = |e: i32| (digits as i32 - 1 - e).max(0) as usize;
    let mut out = format!("{:.*}", decimals(exponent), x);
    // Rounding can carry into a new leading digit (9.99.. -> 10.0..).
    let rounded: f64 = out.parse().unwrap_or(x);
    if rounded.abs() >= 10f64.powi(exponent + 1) {
        out = format!("{:.*}", decimals(exponent + 1), x);
    }
    out
}

/// Ten significant digits, the precision used by every CSV writer.
pub fn fmt10(x: f64) -> String {
    fmt_sig(x, 10)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(fmt10(0.44), "0.4400000000");
        assert_eq!(fmt10(1.0), "1.000000000");
        assert_eq!(fmt10(-2.5), "-2.500000000");
        assert_eq!(fmt10(0.0), "0.000000000");
        assert_eq!(fmt10(123.456), "123.4560000");
        assert_eq!(fmt10(1.2345678901234e-5), "0.00001234567890");
        assert_eq!(fmt_sig(9.9999999999, 10), "10.00000000");
        assert_eq!(fmt_sig(1e12, 3), "1000000000000");
    }
}
