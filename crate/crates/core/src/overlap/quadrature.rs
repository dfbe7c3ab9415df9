use std::num::NonZeroUsize;

use gauss_quad::legendre::GaussLegendre;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Radial quadrature settings for the overlap integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Gauss-Legendre order on `[0, R_cut]`.
    pub radial_points: usize,
    /// `R_cut` as a multiple of the widest second-moment mode radius involved.
    pub radial_cutoff: f64,
    /// Largest accepted change of an integral when the order is doubled.
    pub refinement_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            radial_points: 512,
            radial_cutoff: 8.0,
            refinement_tol: 1e-8,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if self.radial_points < 2 {
            return Err(Error::InvalidInput(format!(
                "radial_points must be at least 2, got {}",
                self.radial_points
            )));
        }
        if !(self.radial_cutoff > 0.0 && self.radial_cutoff.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "radial_cutoff must be positive, got {}",
                self.radial_cutoff
            )));
        }
        if !(self.refinement_tol > 0.0) {
            return Err(Error::InvalidInput(
                "refinement_tol must be positive".into(),
            ));
        }
        Ok(())
    }

    /// Same settings with the radial order doubled.
    pub fn refined(&self) -> Self {
        Self {
            radial_points: self.radial_points * 2,
            ..*self
        }
    }
}

/// Precomputed Gauss-Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct RadialRule {
    pairs: Vec<(f64, f64)>,
}

impl RadialRule {
    pub fn new(order: usize) -> Result<Self> {
        let order = NonZeroUsize::new(order)
            .ok_or_else(|| Error::InvalidInput("quadrature order must be positive".into()))?;
        let rule = GaussLegendre::new(order);
        let pairs = rule.nodes().copied().zip(rule.weights().copied()).collect();
        Ok(Self { pairs })
    }

    pub fn order(&self) -> usize {
        self.pairs.len()
    }

    /// `int_a^b f(x) dx` for a complex integrand.
    pub fn integrate(&self, a: f64, b: f64, f: impl Fn(f64) -> Complex64) -> Complex64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        let sum: Complex64 = self.pairs.iter().map(|&(x, w)| f(mid + half * x) * w).sum();
        sum * half
    }
}
