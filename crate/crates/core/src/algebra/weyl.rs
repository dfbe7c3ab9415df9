//! Heisenberg-Weyl operator basis and decompositions of Hermitian and
//! unitary matrices over it.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::pauli::{build_x, build_z};
use super::spectral::HERMITIAN_TOL;
use crate::error::{Error, Result};

/// Reconstruction residual above which the projection is replaced by a dense solve.
const PROJECTION_RESIDUAL_TOL: f64 = 1e-10;
const UNITARY_TOL: f64 = 1e-10;

fn check_indices(d: usize, j: usize, k: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidDimension(d));
    }
    if j >= d || k >= d {
        return Err(Error::IndexOutOfRange { j, k, dim: d });
    }
    Ok(())
}

/// Phase of `D(j, k)`: `exp(i pi j k (d - 1) / d)`.
///
/// At `d = 2` this is `exp(i pi j k / 2)`. For general `d` it is the choice
/// that makes `D(-j, -k) = +-D(j, k)^dagger`, which is what keeps the
/// `Q_{j,k}` Hermitian set orthogonal and complete.
fn weyl_phase(d: usize, j: usize, k: usize) -> Complex64 {
    let two_d = 2 * d as i64;
    let e = ((j * k) as i64 * (d as i64 - 1)).rem_euclid(two_d);
    if e == 0 {
        return Complex64::new(1.0, 0.0);
    }
    Complex64::from_polar(1.0, PI * e as f64 / d as f64)
}

/// Heisenberg-Weyl operator `D(j, k) = phase(j, k) Z^j X^k`.
pub fn heisenberg_weyl(d: usize, j: usize, k: usize) -> Result<ComplexMatrix> {
    check_indices(d, j, k)?;
    let zx = &build_z(d, j as i64)? * &build_x(d, k as i64)?;
    Ok(zx.scale(weyl_phase(d, j, k)))
}

/// Hermitian basis element `Q_{j,k} = (1+i)/2 D(j,k) + (1-i)/2 D(j,k)^dagger`.
pub fn q_basis(d: usize, j: usize, k: usize) -> Result<ComplexMatrix> {
    let dm = heisenberg_weyl(d, j, k)?;
    let a = dm.scale(Complex64::new(0.5, 0.5));
    let b = dm.adjoint().scale(Complex64::new(0.5, -0.5));
    Ok(&a + &b)
}

/// Which basis a [`DecompositionCoefficients`] grid refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionKind {
    /// Real `C_{j,k}` over `Q_{j,k}`.
    HermitianReal,
    /// Complex `g_{j,k}` over `X^j Z^k`.
    UnitaryComplex,
}

/// `d x d` coefficient grid indexed `(j, k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionCoefficients {
    dim: usize,
    kind: DecompositionKind,
    grid: Vec<Complex64>,
}

impl DecompositionCoefficients {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> DecompositionKind {
        self.kind
    }

    pub fn get(&self, j: usize, k: usize) -> Complex64 {
        self.grid[j * self.dim + k]
    }

    /// Sum the coefficients against their basis to recover the matrix.
    pub fn reconstruct(&self) -> Result<ComplexMatrix> {
        let mut acc = ComplexMatrix::zeros(self.dim)?;
        for j in 0..self.dim {
            for k in 0..self.dim {
                let coef = self.get(j, k);
                if coef == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let basis = match self.kind {
                    DecompositionKind::HermitianReal => q_basis(self.dim, j, k)?,
                    DecompositionKind::UnitaryComplex => shift_clock_product(self.dim, j, k)?,
                };
                acc = &acc + &basis.scale(coef);
            }
        }
        Ok(acc)
    }
}

fn shift_clock_product(d: usize, j: usize, k: usize) -> Result<ComplexMatrix> {
    Ok(&build_x(d, j as i64)? * &build_z(d, k as i64)?)
}

/// Real coefficients `C_{j,k}` with `A = sum C_{j,k} Q_{j,k}`.
///
/// `Tr(Q_a Q_b) = d delta_ab`, so `C_{j,k} = Tr(Q_{j,k} A) / d`.
pub fn decompose_hermitian(a: &ComplexMatrix) -> Result<DecompositionCoefficients> {
    let dev = a.hermitian_deviation();
    if dev > HERMITIAN_TOL {
        return Err(Error::NotHermitian(dev));
    }
    let d = a.dim();
    let mut grid = Vec::with_capacity(d * d);
    for j in 0..d {
        for k in 0..d {
            let q = q_basis(d, j, k)?;
            let c = q.hs_inner(a) / d as f64;
            grid.push(Complex64::new(c.re, 0.0));
        }
    }
    Ok(DecompositionCoefficients {
        dim: d,
        kind: DecompositionKind::HermitianReal,
        grid,
    })
}

/// Complex coefficients `g_{j,k}` with `U = sum g_{j,k} X^j Z^k`.
pub fn decompose_unitary(u: &ComplexMatrix) -> Result<DecompositionCoefficients> {
    let dev = u.unitary_deviation();
    if dev > UNITARY_TOL {
        return Err(Error::NotUnitary(dev));
    }
    let d = u.dim();
    let mut grid = Vec::with_capacity(d * d);
    for j in 0..d {
        for k in 0..d {
            grid.push(shift_clock_product(d, j, k)?.hs_inner(u) / d as f64);
        }
    }
    let coeffs = DecompositionCoefficients {
        dim: d,
        kind: DecompositionKind::UnitaryComplex,
        grid,
    };
    if coeffs.reconstruct()?.max_abs_diff(u) <= PROJECTION_RESIDUAL_TOL {
        return Ok(coeffs);
    }
    solve_unitary_coefficients(u)
}

/// Dense solve of `sum g_{j,k} vec(X^j Z^k) = vec(U)`.
fn solve_unitary_coefficients(u: &ComplexMatrix) -> Result<DecompositionCoefficients> {
    let d = u.dim();
    let n = d * d;
    let mut system = DMatrix::<Complex64>::zeros(n, n);
    for j in 0..d {
        for k in 0..d {
            let basis = shift_clock_product(d, j, k)?;
            let col = j * d + k;
            for (row, z) in basis.as_inner().iter().enumerate() {
                system[(row, col)] = *z;
            }
        }
    }
    let rhs = DVector::from_iterator(n, u.as_inner().iter().copied());
    let solution = system
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::NumericalAccuracy("shift-clock basis system is singular".into()))?;
    Ok(DecompositionCoefficients {
        dim: d,
        kind: DecompositionKind::UnitaryComplex,
        grid: solution.iter().copied().collect(),
    })
}
