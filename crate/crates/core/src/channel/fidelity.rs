use num_complex::Complex64;

use crate::algebra::{clamp_eigenvalue, hermitian_eigen, psd_sqrt};
use crate::error::{Error, Result};

use super::density::DensityMatrix;

/// Uhlmann fidelity `(Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2`.
pub fn fidelity(rho_ideal: &DensityMatrix, rho1: &DensityMatrix) -> Result<f64> {
    let a = rho_ideal.as_matrix();
    let b = rho1.as_matrix();
    a.check_same_dim(b)?;
    let root = psd_sqrt(a)?;
    let inner = &(&root * b) * &root;
    let (values, _) = hermitian_eigen(&inner);
    let trace_root: f64 = values.into_iter().map(|l| clamp_eigenvalue(l).sqrt()).sum();
    Ok((trace_root * trace_root).clamp(0.0, 1.0))
}

/// `<psi| rho |psi>`, the Uhlmann fidelity when the reference is pure.
pub fn fidelity_pure(psi: &[Complex64], rho: &DensityMatrix) -> Result<f64> {
    let m = rho.as_matrix();
    if psi.len() != m.dim() {
        return Err(Error::DimensionMismatch {
            left: psi.len(),
            right: m.dim(),
        });
    }
    let d = psi.len();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..d {
        for j in 0..d {
            acc += psi[i].conj() * m.get(i, j) * psi[j];
        }
    }
    Ok(acc.re.clamp(0.0, 1.0))
}
