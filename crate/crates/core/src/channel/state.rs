use num_complex::Complex64;

use crate::error::{Error, Result};

const NORM_TOL: f64 = 1e-12;

/// Pure state of one logical qudit: amplitude `i` sits on physical OAM `base + i`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuditState {
    base: i32,
    amplitudes: Vec<Complex64>,
}

impl QuditState {
    /// Amplitudes must already be normalized to within 1e-12.
    pub fn new(base: i32, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() < 2 {
            return Err(Error::InvalidDimension(amplitudes.len()));
        }
        let norm: f64 = amplitudes.iter().map(|c| c.norm_sqr()).sum();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidState(format!(
                "amplitudes have squared norm {norm}, expected 1"
            )));
        }
        Ok(Self { base, amplitudes })
    }

    /// Rescale arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(base: i32, amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::InvalidState(
                "amplitudes have zero or non-finite norm".into(),
            ));
        }
        Self::new(base, amplitudes.into_iter().map(|c| c / norm).collect())
    }

    /// Equal superposition of OAM `base, ..., base + d - 1`.
    pub fn uniform(d: usize, base: i32) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidDimension(d));
        }
        let a = Complex64::new(1.0 / (d as f64).sqrt(), 0.0);
        Self::new(base, vec![a; d])
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn base(&self) -> i32 {
        self.base
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Physical OAM values `base..base + d`.
    pub fn physical_oams(&self) -> impl Iterator<Item = i32> + '_ {
        (0..self.dim() as i32).map(move |i| self.base + i)
    }

    pub fn with_global_phase(&self, phase: f64) -> Self {
        let rot = Complex64::from_polar(1.0, phase);
        Self {
            base: self.base,
            amplitudes: self.amplitudes.iter().map(|c| c * rot).collect(),
        }
    }

    pub(crate) fn with_amplitudes(&self, amplitudes: Vec<Complex64>) -> Self {
        Self {
            base: self.base,
            amplitudes,
        }
    }
}
