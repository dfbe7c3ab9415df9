use crate::error::{Error, Result};

/// Evenly spaced shifts `zS/zR` from `min` to `max` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZsGrid {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl Default for ZsGrid {
    /// 0 to 3 Rayleigh lengths in 121 points.
    fn default() -> Self {
        Self {
            min: 0.0,
            max: 3.0,
            steps: 121,
        }
    }
}

impl ZsGrid {
    pub fn new(min: f64, max: f64, steps: usize) -> Result<Self> {
        let grid = Self { min, max, steps };
        grid.validate()?;
        Ok(grid)
    }

    pub fn validate(&self) -> Result<()> {
        if self.steps < 2 {
            return Err(Error::InvalidInput(format!(
                "zS grid needs at least 2 steps, got {}",
                self.steps
            )));
        }
        if !(self.min.is_finite() && self.max.is_finite() && self.min < self.max) {
            return Err(Error::InvalidInput(format!(
                "zS grid bounds must be finite with min < max, got [{}, {}]",
                self.min, self.max
            )));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<f64> {
        let n = self.steps - 1;
        let h = (self.max - self.min) / n as f64;
        (0..=n)
            .map(|i| {
                if i == n {
                    self.max
                } else {
                    self.min + i as f64 * h
                }
            })
            .collect()
    }
}
