//! Laguerre-Gaussian mode overlaps and the conversion coefficients they define.

mod beam;
mod chi;
mod quadrature;

pub use beam::{lg_amplitude, lg_peak_amplitude, BeamGeometry};
pub use chi::{chi_sweep, overlap_chi, Calibration, ChiModel, ChiSource, ChiTable};
pub use quadrature::{QuadratureSpec, RadialRule};
