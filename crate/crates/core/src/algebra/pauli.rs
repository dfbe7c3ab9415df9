//! Generalized Pauli shift and clock operators.
//!
//! Kets are labelled `|1>, ..., |d>`. Storage is 0-based, so label `l`
//! lives at index `l - 1` and `l (+)_d m` becomes `(i + m) mod d` on indices.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

fn check_dim(d: usize) -> Result<()> {
    if d < 2 {
        Err(Error::InvalidDimension(d))
    } else {
        Ok(())
    }
}

/// Reduce any integer power into `0..d`.
pub fn reduce_power(m: i64, d: usize) -> usize {
    m.rem_euclid(d as i64) as usize
}

/// `omega^e` with `omega = exp(2 pi i / d)`; the exponent is reduced mod `d`
/// first so equal powers give bit-identical entries.
pub fn root_of_unity(e: i64, d: usize) -> Complex64 {
    let e = reduce_power(e, d);
    if e == 0 {
        return Complex64::new(1.0, 0.0);
    }
    Complex64::from_polar(1.0, 2.0 * PI * e as f64 / d as f64)
}

/// Shift operator power `X_d^m = sum_l |l (+)_d m><l|`.
pub fn build_x(d: usize, m: i64) -> Result<ComplexMatrix> {
    check_dim(d)?;
    let shift = reduce_power(m, d);
    ComplexMatrix::from_fn(d, |row, col| {
        if row == (col + shift) % d {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Clock operator power `Z_d^m = sum_l omega^{m l} |l><l|`, `l = 1..d`.
pub fn build_z(d: usize, m: i64) -> Result<ComplexMatrix> {
    check_dim(d)?;
    let entries: Vec<Complex64> = (1..=d as i64).map(|l| root_of_unity(m * l, d)).collect();
    ComplexMatrix::diagonal(&entries)
}

/// Checks `(X^k)^dagger = X^{-k}` and `(Z^k)^dagger = Z^{-k}` entrywise to 1e-12.
pub fn adjoint_power_identity_check(d: usize, k: i64) -> bool {
    const TOL: f64 = 1e-12;
    let check = |build: fn(usize, i64) -> Result<ComplexMatrix>| -> bool {
        match (build(d, k), build(d, -k)) {
            (Ok(pos), Ok(neg)) => pos.adjoint().max_abs_diff(&neg) <= TOL,
            _ => false,
        }
    };
    check(build_x) && check(build_z)
}

/// `[a, b] = ab - ba`.
pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.check_same_dim(b)?;
    Ok(&(a * b) - &(b * a))
}

/// Element-wise construction of `[X^k, Z^m]`:
/// `sum_j (omega^{m j} - omega^{m (j (+) k)}) |j (+) k><j|`.
///
/// Built without any matrix product so it can be checked against [`commutator`].
pub fn shift_clock_commutator(d: usize, k: i64, m: i64) -> Result<ComplexMatrix> {
    check_dim(d)?;
    let shift = reduce_power(k, d);
    let mut out = ComplexMatrix::zeros(d)?.into_inner();
    for col in 0..d {
        let label = col as i64 + 1;
        let row = (col + shift) % d;
        let shifted_label = row as i64 + 1;
        out[(row, col)] = root_of_unity(m * label, d) - root_of_unity(m * shifted_label, d);
    }
    ComplexMatrix::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn qubit_operators_are_pauli() {
        let x = build_x(2, 1).unwrap();
        let sigma_x = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        assert_eq!(x, sigma_x);

        // Labels 1..d give diag(-1, 1) = -sigma_z.
        let z = build_z(2, 1).unwrap();
        assert!((z.get(0, 0) - c(-1.0, 0.0)).norm() < 1e-15);
        assert!((z.get(1, 1) - c(1.0, 0.0)).norm() < 1e-15);
        let sigma_z = ComplexMatrix::diagonal(&[c(1.0, 0.0), c(-1.0, 0.0)]).unwrap();
        assert!(z.scale(c(-1.0, 0.0)).max_abs_diff(&sigma_z) < 1e-15);
    }

    #[test]
    fn shift_moves_labels_cyclically() {
        // |1> -> |2>, |2> -> |3>, |3> -> |1>
        let x = build_x(3, 1).unwrap();
        assert_eq!(x.get(1, 0), c(1.0, 0.0));
        assert_eq!(x.get(2, 1), c(1.0, 0.0));
        assert_eq!(x.get(0, 2), c(1.0, 0.0));
        assert!(build_x(3, 3).unwrap().is_identity(0.0));
        assert!(build_x(3, 0).unwrap().is_identity(0.0));
        assert_eq!(build_x(3, -1).unwrap(), build_x(3, 2).unwrap());
    }

    #[test]
    fn clock_powers() {
        assert!(build_z(4, 4).unwrap().is_identity(0.0));
        let w = root_of_unity(1, 3);
        let z = build_z(3, 2).unwrap();
        assert!((z.get(0, 0) - w.powi(2)).norm() < 1e-14);
        assert!((z.get(1, 1) - w.powi(4)).norm() < 1e-14);
        assert!((z.get(2, 2) - w.powi(6)).norm() < 1e-14);
    }

    #[test]
    fn invalid_dimension() {
        assert_eq!(build_x(1, 1), Err(Error::InvalidDimension(1)));
        assert_eq!(build_z(0, 1), Err(Error::InvalidDimension(0)));
    }

    #[test]
    fn adjoint_identities() {
        assert!(adjoint_power_identity_check(3, 1));
        assert!(adjoint_power_identity_check(5, 4));
        assert!(adjoint_power_identity_check(2, 1));
    }

    #[test]
    fn commutators() {
        let x = build_x(3, 1).unwrap();
        let z = build_z(3, 1).unwrap();
        let direct = commutator(&x, &z).unwrap();
        let closed = shift_clock_commutator(3, 1, 1).unwrap();
        assert!(direct.max_abs_diff(&closed) < 1e-13);
        assert!(!direct.is_zero(1e-3));

        let id = ComplexMatrix::identity(3).unwrap();
        assert!(commutator(&id, &z).unwrap().is_zero(0.0));
        assert!(commutator(&x, &build_x(3, 2).unwrap())
            .unwrap()
            .is_zero(0.0));

        let small = ComplexMatrix::identity(2).unwrap();
        assert!(commutator(&small, &x).is_err());
    }
}
