//! Functions of Hermitian matrices through eigendecomposition.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Tolerance used to accept a matrix as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Eigenvalues at or below this magnitude are treated as exact zeros when
/// taking square roots; round-off on a rank-deficient matrix otherwise leaks
/// `sqrt(1e-16) ~ 1e-8` into traces.
pub const EIGEN_FLOOR: f64 = 1e-12;

/// Eigenvalues (ascending order not guaranteed) and column eigenvectors of
/// the Hermitian part of `a`.
pub fn hermitian_eigen(a: &ComplexMatrix) -> (Vec<f64>, DMatrix<Complex64>) {
    let inner = a.as_inner();
    let sym = (inner + inner.adjoint()).map(|z| z * 0.5);
    let eig = sym.symmetric_eigen();
    (eig.eigenvalues.iter().copied().collect(), eig.eigenvectors)
}

/// `V f(Lambda) V^dagger` for the Hermitian part of `a`.
pub fn apply_hermitian(a: &ComplexMatrix, f: impl Fn(f64) -> Complex64) -> ComplexMatrix {
    let (values, vectors) = hermitian_eigen(a);
    let d = values.len();
    let mut scaled = vectors.clone();
    for (col, &lambda) in values.iter().enumerate() {
        let fl = f(lambda);
        for row in 0..d {
            scaled[(row, col)] *= fl;
        }
    }
    ComplexMatrix::new(scaled * vectors.adjoint()).expect("eigendecomposition preserves shape")
}

fn require_hermitian(a: &ComplexMatrix) -> Result<()> {
    let dev = a.hermitian_deviation();
    if dev > HERMITIAN_TOL {
        Err(Error::NotHermitian(dev))
    } else {
        Ok(())
    }
}

/// `exp(iA)` for Hermitian `A`; the result is unitary.
pub fn unitary_from_hermitian(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    require_hermitian(a)?;
    Ok(apply_hermitian(a, |lambda| {
        Complex64::from_polar(1.0, lambda)
    }))
}

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues within [`EIGEN_FLOOR`] of zero, or negative, are clamped to 0.
pub fn psd_sqrt(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    require_hermitian(a)?;
    Ok(apply_hermitian(a, |lambda| {
        Complex64::new(clamp_eigenvalue(lambda).sqrt(), 0.0)
    }))
}

pub(crate) fn clamp_eigenvalue(lambda: f64) -> f64 {
    if lambda <= EIGEN_FLOOR {
        0.0
    } else {
        lambda
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn exp_of_zero_is_identity() {
        let z = ComplexMatrix::zeros(3).unwrap();
        assert!(unitary_from_hermitian(&z).unwrap().is_identity(1e-15));
    }

    #[test]
    fn exp_of_diagonal() {
        let a = ComplexMatrix::diagonal(&[c(PI, 0.0), c(0.0, 0.0)]).unwrap();
        let u = unitary_from_hermitian(&a).unwrap();
        let expected = ComplexMatrix::diagonal(&[c(-1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!(u.max_abs_diff(&expected) < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let a = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        assert!(matches!(
            unitary_from_hermitian(&a),
            Err(Error::NotHermitian(_))
        ));
        assert!(matches!(psd_sqrt(&a), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn sqrt_squares_back() {
        let a = ComplexMatrix::from_rows(&[
            vec![c(2.0, 0.0), c(0.0, 1.0)],
            vec![c(0.0, -1.0), c(2.0, 0.0)],
        ])
        .unwrap();
        let s = psd_sqrt(&a).unwrap();
        assert!((&s * &s).max_abs_diff(&a) < 1e-13);
    }

    #[test]
    fn sqrt_of_projector_is_itself() {
        let psi = [c(0.6, 0.0), c(0.0, 0.8)];
        let p = ComplexMatrix::outer(&psi, &psi).unwrap();
        assert!(psd_sqrt(&p).unwrap().max_abs_diff(&p) < 1e-14);
    }
}
