use crate::algebra::{hermitian_eigen, ComplexMatrix};
use crate::error::{Error, Result};

use super::state::QuditState;

const HERMITIAN_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-12;
const PSD_TOL: f64 = 1e-10;

/// Hermitian, unit-trace, positive semidefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(ComplexMatrix);

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let herm = matrix.hermitian_deviation();
        if herm > HERMITIAN_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "not Hermitian (deviation {herm:.3e})"
            )));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvalidDensityMatrix(format!("trace {tr} is not 1")));
        }
        let (values, _) = hermitian_eigen(&matrix);
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        if min < -PSD_TOL {
            return Err(Error::InvalidDensityMatrix(format!(
                "negative eigenvalue {min:.3e}"
            )));
        }
        Ok(Self(matrix))
    }

    /// `|psi><psi|` over the logical slots of `state`.
    pub fn from_pure(state: &QuditState) -> Self {
        let amps = state.amplitudes();
        Self(ComplexMatrix::outer(amps, amps).expect("state dimension is at least 2"))
    }

    /// `m / Tr(m)`, Hermitian part only; for channel outputs that are
    /// positive by construction.
    pub(crate) fn from_unnormalized(m: &ComplexMatrix) -> Result<Self> {
        let herm = &(m + &m.adjoint()).scale(0.5.into());
        let tr = herm.trace().re;
        if !(tr > 0.0) {
            return Err(Error::InvalidDensityMatrix(format!(
                "trace {tr} is not positive"
            )));
        }
        Self::new(herm.scale((1.0 / tr).into()))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn as_matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    /// `Tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        self.0.hs_inner(&self.0).re
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn pure_states_are_valid() {
        let s = QuditState::uniform(4, 1).unwrap();
        let rho = DensityMatrix::from_pure(&s);
        assert!(DensityMatrix::new(rho.as_matrix().clone()).is_ok());
        assert!((rho.purity() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_invalid_matrices() {
        let c = |x: f64| Complex64::new(x, 0.0);
        let twice = ComplexMatrix::identity(2).unwrap();
        assert!(DensityMatrix::new(twice).is_err());
        let negative = ComplexMatrix::diagonal(&[c(1.5), c(-0.5)]).unwrap();
        assert!(DensityMatrix::new(negative).is_err());
        let skew = ComplexMatrix::from_rows(&[vec![c(0.5), c(0.3)], vec![c(0.0), c(0.5)]]).unwrap();
        assert!(DensityMatrix::new(skew).is_err());
    }
}
