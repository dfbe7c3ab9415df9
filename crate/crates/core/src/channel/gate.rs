//! Ideal and lossy shift gates on a logical qudit.
//!
//! The lossy gate `x_d^m` converts each physical mode `l` with amplitude
//! efficiency `chi_{l,m}` while permuting logical slots exactly like `X_d^m`.
//! Only the all-modes-converted branch is modelled: its probability `p1` and
//! its renormalized state `rho1`. The complementary branch is carried purely
//! as probability mass `1 - p1`.

use num_complex::Complex64;

use crate::algebra::{build_x, reduce_power, ComplexMatrix};
use crate::error::{Error, Result};
use crate::numfmt::fmt10;
use crate::overlap::ChiSource;

use super::density::DensityMatrix;
use super::fidelity::fidelity;
use super::state::QuditState;

/// `X_d^m` on amplitudes: the coefficient in slot `l` moves to `l (+)_d m`.
pub fn ideal_gate(state: &QuditState, m: i64) -> QuditState {
    let d = state.dim();
    let shift = reduce_power(m, d);
    let mut out = vec![Complex64::new(0.0, 0.0); d];
    for (i, c) in state.amplitudes().iter().enumerate() {
        out[(i + shift) % d] = *c;
    }
    state.with_amplitudes(out)
}

/// `p1 = prod chi^2`, the probability that every mode converts.
pub fn success_probability(chis: &[f64]) -> Result<f64> {
    if chis.is_empty() {
        return Err(Error::InvalidInput(
            "no conversion coefficients given".into(),
        ));
    }
    if let Some(bad) = chis.iter().find(|c| !(0.0..=1.0).contains(*c)) {
        return Err(Error::InvalidInput(format!("chi = {bad} outside [0, 1]")));
    }
    Ok(chis.iter().map(|c| c * c).product())
}

/// `sum |C_l|^2 chi_l^2`: the success probability a single photon in the
/// superposition would have. A diagnostic only; reported numbers use
/// [`success_probability`].
pub fn single_photon_success_probability(state: &QuditState, chis: &[f64]) -> Result<f64> {
    if chis.len() != state.dim() {
        return Err(Error::DimensionMismatch {
            left: state.dim(),
            right: chis.len(),
        });
    }
    Ok(state
        .amplitudes()
        .iter()
        .zip(chis)
        .map(|(c, x)| c.norm_sqr() * x * x)
        .sum())
}

/// Kraus operator of the success branch, `X_d^m diag(chi)`.
pub fn lossy_operator(chis: &[f64], m: i64) -> Result<ComplexMatrix> {
    let diag: Vec<Complex64> = chis.iter().map(|&c| Complex64::new(c, 0.0)).collect();
    let x = build_x(chis.len(), m)?;
    Ok(&x * &ComplexMatrix::diagonal(&diag)?)
}

/// Result of one lossy gate application.
#[derive(Debug, Clone, PartialEq)]
pub struct GateOutcome {
    pub m: i32,
    pub zs_over_zr: f64,
    pub p1: f64,
    pub rho1: DensityMatrix,
    pub rho_ideal: DensityMatrix,
    pub fidelity: f64,
    /// `(physical OAM, chi)` for each mode of the input state.
    pub chi_used: Vec<(i32, f64)>,
}

impl GateOutcome {
    pub fn dim(&self) -> usize {
        self.rho1.dim()
    }

    pub fn chis(&self) -> Vec<f64> {
        self.chi_used.iter().map(|&(_, c)| c).collect()
    }

    /// `d=.. m=.. zS_over_zR=.. p1=.. fidelity=.. chi=l:chi,...`
    pub fn report_line(&self) -> String {
        let chis: Vec<String> = self
            .chi_used
            .iter()
            .map(|(l, c)| format!("{l}:{}", fmt10(*c)))
            .collect();
        format!(
            "d={} m={} zS_over_zR={} p1={} fidelity={} chi={}",
            self.dim(),
            self.m,
            fmt10(self.zs_over_zr),
            fmt10(self.p1),
            fmt10(self.fidelity),
            chis.join(",")
        )
    }
}

/// Apply `x_d^m` to `state` with coefficients from `source` at shift `zS/zR`.
pub fn lossy_gate(
    state: &QuditState,
    m: i32,
    source: &(impl ChiSource + ?Sized),
    zs_over_zr: f64,
) -> Result<GateOutcome> {
    let chi_used = state
        .physical_oams()
        .map(|l| source.chi(l, m, zs_over_zr).map(|c| (l, c)))
        .collect::<Result<Vec<_>>>()?;
    gate_from_chis(state, m, zs_over_zr, chi_used)
}

fn gate_from_chis(
    state: &QuditState,
    m: i32,
    zs_over_zr: f64,
    chi_used: Vec<(i32, f64)>,
) -> Result<GateOutcome> {
    if let Some(&(l, _)) = chi_used.iter().find(|(_, c)| *c == 0.0) {
        return Err(Error::DegenerateChannel { l });
    }
    let chis: Vec<f64> = chi_used.iter().map(|&(_, c)| c).collect();
    let p1 = success_probability(&chis)?;

    let rho_in = DensityMatrix::from_pure(state);
    let x = lossy_operator(&chis, m as i64)?;
    let unnormalized = &(&x * rho_in.as_matrix()) * &x.adjoint();
    let rho1 = DensityMatrix::from_unnormalized(&unnormalized)?;
    let rho_ideal = DensityMatrix::from_pure(&ideal_gate(state, m as i64));
    let fidelity = fidelity(&rho_ideal, &rho1)?;

    Ok(GateOutcome {
        m,
        zs_over_zr,
        p1,
        rho1,
        rho_ideal,
        fidelity,
        chi_used,
    })
}
