use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Shared geometry of the signal and driving beams.
///
/// Both beams have the same waist `w0` and Rayleigh range `z_r`; the drive
/// waist is displaced along the axis by a shift that callers pass as the
/// dimensionless ratio `zS / zR`. The atomic ensemble sits at the signal waist
/// (`z = 0`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamGeometry {
    w0: f64,
    z_r: f64,
}

impl BeamGeometry {
    pub fn new(w0: f64, z_r: f64) -> Result<Self> {
        if !(w0 > 0.0 && w0.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "waist w0 must be positive, got {w0}"
            )));
        }
        if !(z_r > 0.0 && z_r.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "Rayleigh range zR must be positive, got {z_r}"
            )));
        }
        Ok(Self { w0, z_r })
    }

    pub fn w0(&self) -> f64 {
        self.w0
    }

    pub fn z_r(&self) -> f64 {
        self.z_r
    }

    /// Absolute axial shift for a given `zS / zR`.
    pub fn shift(&self, zs_over_zr: f64) -> f64 {
        zs_over_zr * self.z_r
    }

    /// `w(z) = w0 sqrt(1 + (z/zR)^2)`.
    pub fn beam_radius(&self, z: f64) -> f64 {
        self.w0 * (1.0 + (z / self.z_r).powi(2)).sqrt()
    }

    pub fn gouy_phase(&self, z: f64) -> f64 {
        (z / self.z_r).atan()
    }

    /// `k r^2 / (2 R(z))` with `k = 2 zR / w0^2`; zero at the waist.
    pub fn curvature_phase(&self, r: f64, z: f64) -> f64 {
        r * r * z * self.z_r / (self.w0 * self.w0 * (z * z + self.z_r * self.z_r))
    }

    /// Second-moment radius of an LG mode with OAM `l`: `w(z) sqrt((|l| + 1) / 2)`.
    pub fn mode_radius(&self, l: i32, z: f64) -> f64 {
        self.beam_radius(z) * ((l.unsigned_abs() as f64 + 1.0) / 2.0).sqrt()
    }
}

impl Default for BeamGeometry {
    fn default() -> Self {
        Self { w0: 1.0, z_r: 1.0 }
    }
}

fn ln_factorial(n: u32) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// Modulus of the unit-power LG_{0,l} amplitude at radius `r` in the plane `z`.
pub(crate) fn lg_modulus(l: i32, geom: &BeamGeometry, r: f64, z: f64) -> f64 {
    let a = l.unsigned_abs();
    let w = geom.beam_radius(z);
    if a > 0 && r == 0.0 {
        return 0.0;
    }
    let mut ln_amp = 0.5 * (2.0 / PI).ln() - 0.5 * ln_factorial(a) - w.ln() - (r / w).powi(2);
    if a > 0 {
        ln_amp += a as f64 * (std::f64::consts::SQRT_2 * r / w).ln();
    }
    ln_amp.exp()
}

/// LG_{0,l} amplitude without the azimuthal factor `exp(i l phi)`.
pub(crate) fn lg_radial(l: i32, geom: &BeamGeometry, r: f64, z: f64) -> Complex64 {
    let modulus = lg_modulus(l, geom, r, z);
    let phase = -geom.curvature_phase(r, z) + (l.unsigned_abs() as f64 + 1.0) * geom.gouy_phase(z);
    Complex64::from_polar(modulus, phase)
}

/// Peak of `|u_l(r, z)|` over `r`, attained at `r = w(z) sqrt(|l| / 2)`.
pub fn lg_peak_amplitude(l: i32, geom: &BeamGeometry, z: f64) -> f64 {
    let r_peak = geom.beam_radius(z) * (l.unsigned_abs() as f64 / 2.0).sqrt();
    lg_modulus(l, geom, r_peak, z)
}

/// Unit-power Laguerre-Gaussian amplitude `u_{l,p}(r, phi, z)`.
///
/// Includes the beam-radius scaling, wavefront curvature, Gouy phase
/// `(|l| + 1) atan(z / zR)` and the vortex factor `exp(i l phi)`. Only the
/// radial index `p = 0` is modelled.
pub fn lg_amplitude(
    l: i32,
    p: u32,
    geom: &BeamGeometry,
    r: f64,
    phi: f64,
    z: f64,
) -> Result<Complex64> {
    if p != 0 {
        return Err(Error::UnsupportedRadialIndex(p));
    }
    Ok(lg_radial(l, geom, r, z) * Complex64::from_polar(1.0, l as f64 * phi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_geometry() {
        assert!(BeamGeometry::new(0.0, 1.0).is_err());
        assert!(BeamGeometry::new(1.0, -2.0).is_err());
        assert!(BeamGeometry::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn radial_index_must_be_zero() {
        let g = BeamGeometry::default();
        assert_eq!(
            lg_amplitude(1, 1, &g, 0.5, 0.0, 0.0),
            Err(Error::UnsupportedRadialIndex(1))
        );
    }

    #[test]
    fn fundamental_mode_on_axis() {
        let g = BeamGeometry::new(2.0, 3.0).unwrap();
        let u = lg_amplitude(0, 0, &g, 0.0, 0.3, 0.0).unwrap();
        assert!(u.im.abs() < 1e-15);
        assert!((u.re - (2.0 / PI).sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn vortex_core_is_dark() {
        let g = BeamGeometry::default();
        for l in [-3, -1, 1, 2, 7] {
            assert_eq!(lg_amplitude(l, 0, &g, 0.0, 1.0, 0.7).unwrap().norm(), 0.0);
        }
    }

    #[test]
    fn peak_is_a_maximum() {
        let g = BeamGeometry::default();
        for l in [0, 1, 2, 5] {
            for z in [0.0, 1.3] {
                let peak = lg_peak_amplitude(l, &g, z);
                let max_sampled = (0..4000)
                    .map(|i| lg_modulus(l, &g, i as f64 * 1e-3, z))
                    .fold(0.0, f64::max);
                assert!(peak >= max_sampled - 1e-15);
                assert!(peak - max_sampled < 1e-6);
            }
        }
    }
}
