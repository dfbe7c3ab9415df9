//! Plain-text matrix format.
//!
//! ```text
//! 2
//! 0+0j 1+0j
//! 1+0j 0+0j
//! ```
//!
//! First line is the dimension, followed by `d` rows of `d` whitespace
//! separated `re+imj` tokens. Numbers are written with the shortest
//! representation that round-trips, so write/parse is lossless.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

pub fn format_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}j", z.re, sign, z.im.abs())
}

pub fn parse_complex(token: &str) -> Result<Complex64> {
    let bad = || Error::Parse(format!("malformed complex number '{token}'"));
    let body = token.trim().strip_suffix('j').ok_or_else(bad)?;
    let bytes = body.as_bytes();
    // Split at the last sign that is neither leading nor part of an exponent.
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'))
        .ok_or_else(bad)?;
    let re: f64 = body[..split].parse().map_err(|_| bad())?;
    let im: f64 = body[split..].parse().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

pub fn write_matrix(m: &ComplexMatrix) -> String {
    let d = m.dim();
    let mut out = format!("{d}\n");
    for i in 0..d {
        let row: Vec<String> = (0..d).map(|j| format_complex(m.get(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let d: usize = header
        .parse()
        .map_err(|_| Error::Parse(format!("bad dimension line '{header}'")))?;
    let rows = lines
        .map(|line| {
            line.split_whitespace()
                .map(parse_complex)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if rows.len() != d {
        return Err(Error::Parse(format!(
            "expected {d} rows, found {}",
            rows.len()
        )));
    }
    ComplexMatrix::from_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::pauli::build_z;
    use proptest::prelude::*;

    #[test]
    fn pauli_x_golden() {
        let x = crate::algebra::pauli::build_x(2, 1).unwrap();
        assert_eq!(write_matrix(&x), "2\n0+0j 1+0j\n1+0j 0+0j\n");
    }

    #[test]
    fn parses_exponents_and_signs() {
        assert_eq!(
            parse_complex("1e-3-2.5E+2j").unwrap(),
            Complex64::new(1e-3, -250.0)
        );
        assert_eq!(parse_complex("-0.5+0j").unwrap(), Complex64::new(-0.5, 0.0));
        assert!(parse_complex("1+2").is_err());
        assert!(parse_complex("j").is_err());
    }

    #[test]
    fn rejects_wrong_row_count() {
        assert!(parse_matrix("3\n1+0j 0+0j 0+0j\n").is_err());
        assert!(parse_matrix("2\n1+0j\n0+0j 1+0j\n").is_err());
    }

    #[test]
    fn clock_matrix_round_trips_exactly() {
        let z = build_z(5, 2).unwrap();
        assert_eq!(parse_matrix(&write_matrix(&z)).unwrap(), z);
    }

    proptest! {
        #[test]
        fn complex_tokens_round_trip(re in -1e6f64..1e6, im in -1e6f64..1e6) {
            let z = Complex64::new(re, im);
            prop_assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
        }
    }
}
