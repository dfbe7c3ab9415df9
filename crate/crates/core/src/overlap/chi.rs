//! Conversion coefficients `chi_{l,m}(zS/zR)` from three-mode LG overlaps.
//!
//! A signal photon in mode `l` written with a drive of OAM `m` and read out
//! with a plane wave leaves in mode `l - m`. The amplitude of that conversion
//! is the overlap
//!
//! ```text
//! I = int u*_{l-m}(rho, 0) u_l(rho, 0) u*_m(rho, zS) d^2 rho
//! ```
//!
//! of unit-power modes, the drive being focused `zS` away from the atoms.
//! The azimuthal integral is `2 pi` exactly (the vortex phases cancel), so
//! only a radial quadrature remains. The drive is measured relative to its
//! peak amplitude in the atomic plane, and a per-`|m|` efficiency constant
//! fixes the absolute scale:
//!
//! ```text
//! chi = kappa_|m| |I| / max_r |u_m(r, zS)|,   clipped to [0, 1]
//! ```

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use super::beam::{lg_peak_amplitude, lg_radial, BeamGeometry};
use super::quadrature::{QuadratureSpec, RadialRule};
use crate::error::{Error, Result};
use crate::numfmt::fmt10;

/// Per-`|m|` efficiency constants multiplying the peak-normalized overlap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Calibration {
    pub kappa_1: f64,
    pub kappa_2: f64,
}

impl Calibration {
    /// Fitted so the uniform qutrit on OAM 4, 5, 6 reaches success
    /// probability 0.44 (`m = -1`) and 0.49 (`m = -2`) at its
    /// fidelity-optimal shift, with default geometry and quadrature.
    /// Reproduced by `sweep::calibrate_kappa`.
    pub const FITTED: Self = Self {
        kappa_1: 1.021_148_902_5,
        kappa_2: 1.208_543_752_1,
    };

    /// Bare peak-normalized overlap.
    pub const UNIT: Self = Self {
        kappa_1: 1.0,
        kappa_2: 1.0,
    };

    /// Drives with `|m| > 2` are uncalibrated and use 1.
    pub fn kappa(&self, m: i32) -> f64 {
        match m.unsigned_abs() {
            1 => self.kappa_1,
            2 => self.kappa_2,
            _ => 1.0,
        }
    }
}

impl Default for Calibration {
    fn default() -> Self {
        Self::FITTED
    }
}

/// Anything that can hand out `chi_{l,m}` at a shift `zS/zR`.
pub trait ChiSource: Sync {
    fn chi(&self, l: i32, m: i32, zs_over_zr: f64) -> Result<f64>;

    /// Whether `chi` is defined at arbitrary shifts rather than on a fixed grid.
    fn is_continuous(&self) -> bool {
        false
    }
}

/// On-demand evaluator of the overlap model.
#[derive(Debug, Clone)]
pub struct ChiModel {
    geom: BeamGeometry,
    quad: QuadratureSpec,
    calibration: Calibration,
    coarse: RadialRule,
    fine: RadialRule,
}

impl ChiModel {
    pub fn new(geom: BeamGeometry, quad: QuadratureSpec) -> Result<Self> {
        quad.validate()?;
        Ok(Self {
            geom,
            quad,
            calibration: Calibration::default(),
            coarse: RadialRule::new(quad.radial_points)?,
            fine: RadialRule::new(quad.refined().radial_points)?,
        })
    }

    pub fn with_calibration(mut self, calibration: Calibration) -> Self {
        self.calibration = calibration;
        self
    }

    pub fn geometry(&self) -> &BeamGeometry {
        &self.geom
    }

    pub fn quadrature(&self) -> &QuadratureSpec {
        &self.quad
    }

    pub fn calibration(&self) -> Calibration {
        self.calibration
    }

    fn overlap_integral(&self, rule: &RadialRule, l: i32, m: i32, z: f64) -> Complex64 {
        let g = &self.geom;
        let r_cut = self.quad.radial_cutoff
            * g.mode_radius(l - m, 0.0)
                .max(g.mode_radius(l, 0.0))
                .max(g.mode_radius(m, z));
        let radial = rule.integrate(0.0, r_cut, |r| {
            lg_radial(l - m, g, r, 0.0).conj()
                * lg_radial(l, g, r, 0.0)
                * lg_radial(m, g, r, z).conj()
                * r
        });
        radial * (2.0 * PI)
    }

    /// `|I| / max|u_m|` before calibration and clipping.
    ///
    /// Evaluated at the configured order and at twice that order; a change
    /// larger than `refinement_tol` is reported as a numerical-accuracy error.
    pub fn peak_normalized_overlap(&self, l: i32, m: i32, zs_over_zr: f64) -> Result<f64> {
        if m == 0 {
            return Err(Error::InvalidInput("drive OAM m must be nonzero".into()));
        }
        if !zs_over_zr.is_finite() {
            return Err(Error::InvalidInput(format!(
                "non-finite shift {zs_over_zr}"
            )));
        }
        let z = self.geom.shift(zs_over_zr);
        let peak = lg_peak_amplitude(m, &self.geom, z);
        let coarse = self.overlap_integral(&self.coarse, l, m, z).norm() / peak;
        let fine = self.overlap_integral(&self.fine, l, m, z).norm() / peak;
        if (fine - coarse).abs() > self.quad.refinement_tol {
            return Err(Error::NumericalAccuracy(format!(
                "radial quadrature not converged for l={l}, m={m}, zS/zR={zs_over_zr}: \
                 {coarse} vs {fine} at {} / {} points",
                self.coarse.order(),
                self.fine.order()
            )));
        }
        Ok(fine)
    }
}

impl ChiSource for ChiModel {
    fn chi(&self, l: i32, m: i32, zs_over_zr: f64) -> Result<f64> {
        let raw = self.peak_normalized_overlap(l, m, zs_over_zr)?;
        Ok((self.calibration.kappa(m) * raw).clamp(0.0, 1.0))
    }

    fn is_continuous(&self) -> bool {
        true
    }
}

/// One-shot evaluation of `chi_{l,m}` with the fitted calibration.
pub fn overlap_chi(
    l: i32,
    m: i32,
    zs_over_zr: f64,
    geom: &BeamGeometry,
    quad: &QuadratureSpec,
) -> Result<f64> {
    ChiModel::new(*geom, *quad)?.chi(l, m, zs_over_zr)
}

/// `chi_{l,m}` tabulated over signal OAM values and a shift grid, for one drive `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChiTable {
    m: i32,
    l_values: Vec<i32>,
    zs_grid: Vec<f64>,
    /// `values[i][j]` is chi for `l_values[i]` at `zs_grid[j]`.
    values: Vec<Vec<f64>>,
}

impl ChiTable {
    pub fn new(
        m: i32,
        l_values: Vec<i32>,
        zs_grid: Vec<f64>,
        values: Vec<Vec<f64>>,
    ) -> Result<Self> {
        if l_values.is_empty() || zs_grid.is_empty() {
            return Err(Error::InvalidInput(
                "chi table needs non-empty l and zS grids".into(),
            ));
        }
        if zs_grid.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidInput(
                "zS grid must be strictly increasing".into(),
            ));
        }
        if values.len() != l_values.len() || values.iter().any(|row| row.len() != zs_grid.len()) {
            return Err(Error::InvalidInput(
                "chi table shape does not match its grids".into(),
            ));
        }
        if let Some(bad) = values.iter().flatten().find(|v| !(0.0..=1.0).contains(*v)) {
            return Err(Error::InvalidInput(format!(
                "chi value {bad} outside [0, 1]"
            )));
        }
        Ok(Self {
            m,
            l_values,
            zs_grid,
            values,
        })
    }

    pub fn m(&self) -> i32 {
        self.m
    }

    pub fn l_values(&self) -> &[i32] {
        &self.l_values
    }

    pub fn zs_grid(&self) -> &[f64] {
        &self.zs_grid
    }

    pub fn row(&self, l: i32) -> Option<&[f64]> {
        self.l_values
            .iter()
            .position(|&x| x == l)
            .map(|i| self.values[i].as_slice())
    }

    fn zs_index(&self, zs: f64) -> Option<usize> {
        let tol = 1e-12 * zs.abs().max(1.0);
        let idx = self.zs_grid.partition_point(|&g| g < zs - tol);
        (idx < self.zs_grid.len() && (self.zs_grid[idx] - zs).abs() <= tol).then_some(idx)
    }

    pub fn lookup(&self, l: i32, zs_over_zr: f64) -> Result<f64> {
        let miss = || Error::Coverage {
            l,
            m: self.m,
            zs: zs_over_zr,
        };
        let row = self.row(l).ok_or_else(miss)?;
        let j = self.zs_index(zs_over_zr).ok_or_else(miss)?;
        Ok(row[j])
    }

    /// CSV with header `l,m,zS_over_zR,chi`, rows ordered by `l` then shift.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("l,m,zS_over_zR,chi\n");
        for (l, row) in self.l_values.iter().zip(&self.values) {
            for (zs, chi) in self.zs_grid.iter().zip(row) {
                out.push_str(&format!("{l},{},{},{}\n", self.m, fmt10(*zs), fmt10(*chi)));
            }
        }
        out
    }
}

impl ChiSource for ChiTable {
    fn chi(&self, l: i32, m: i32, zs_over_zr: f64) -> Result<f64> {
        if m != self.m {
            return Err(Error::Coverage {
                l,
                m,
                zs: zs_over_zr,
            });
        }
        self.lookup(l, zs_over_zr)
    }
}

/// Tabulate `source` over `l_values x zs_grid`. Grid points are evaluated in
/// parallel and assembled in grid order.
pub fn chi_sweep(
    m: i32,
    l_values: &[i32],
    zs_grid: &[f64],
    source: &(impl ChiSource + ?Sized),
) -> Result<ChiTable> {
    if l_values.is_empty() || zs_grid.is_empty() {
        return Err(Error::InvalidInput(
            "chi sweep needs non-empty l and zS grids".into(),
        ));
    }
    let values = l_values
        .par_iter()
        .map(|&l| {
            zs_grid
                .par_iter()
                .map(|&zs| {
                    source.chi(l, m, zs).map_err(|e| match e {
                        Error::NumericalAccuracy(msg) => {
                            Error::NumericalAccuracy(format!("at l={l}, m={m}, zS/zR={zs}: {msg}"))
                        }
                        other => other,
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        // first failure in grid order, independent of scheduling
        .map(|row| row.into_iter().collect::<Result<Vec<f64>>>())
        .collect::<Result<Vec<_>>>()?;
    ChiTable::new(m, l_values.to_vec(), zs_grid.to_vec(), values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model() -> ChiModel {
        ChiModel::new(BeamGeometry::default(), QuadratureSpec::default()).unwrap()
    }

    #[test]
    fn zero_drive_is_rejected() {
        assert!(matches!(
            model().chi(3, 0, 1.0),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn chi_is_a_fraction() {
        let m = model();
        for l in -3..=10 {
            for zs in [0.0, 0.7, 1.5, 3.0] {
                for drive in [-2, -1, 1, 2] {
                    let c = m.chi(l, drive, zs).unwrap();
                    assert!((0.0..=1.0).contains(&c), "chi({l},{drive},{zs}) = {c}");
                }
            }
        }
    }

    #[test]
    fn invariant_under_refinement() {
        let coarse = model();
        let fine =
            ChiModel::new(BeamGeometry::default(), QuadratureSpec::default().refined()).unwrap();
        for (l, zs) in [(0, 0.5), (4, 2.3), (8, 3.0)] {
            let a = coarse.chi(l, -1, zs).unwrap();
            let b = fine.chi(l, -1, zs).unwrap();
            assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn depends_only_on_shift_ratio() {
        let unit = model();
        let scaled = ChiModel::new(
            BeamGeometry::new(3.5e-4, 0.2).unwrap(),
            QuadratureSpec::default(),
        )
        .unwrap();
        for (l, zs) in [(2, 0.4), (5, 1.7)] {
            let a = unit.chi(l, -2, zs).unwrap();
            let b = scaled.chi(l, -2, zs).unwrap();
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn coarse_quadrature_is_flagged() {
        let quad = QuadratureSpec {
            radial_points: 6,
            ..Default::default()
        };
        let m = ChiModel::new(BeamGeometry::default(), quad).unwrap();
        assert!(matches!(
            m.chi(6, -1, 2.0),
            Err(Error::NumericalAccuracy(_))
        ));
    }

    #[test]
    fn table_lookup_and_coverage() {
        let t = ChiTable::new(
            -1,
            vec![4, 5],
            vec![0.0, 0.5, 1.0],
            vec![vec![0.1, 0.2, 0.3], vec![0.4, 0.5, 0.6]],
        )
        .unwrap();
        assert_eq!(t.lookup(5, 0.5).unwrap(), 0.5);
        assert_eq!(t.chi(4, -1, 1.0).unwrap(), 0.3);
        assert!(matches!(t.lookup(6, 0.5), Err(Error::Coverage { .. })));
        assert!(matches!(t.lookup(4, 0.25), Err(Error::Coverage { .. })));
        assert!(matches!(t.chi(4, -2, 0.5), Err(Error::Coverage { .. })));
        assert!(!t.is_continuous());
    }

    #[test]
    fn table_validation() {
        assert!(ChiTable::new(-1, vec![], vec![0.0], vec![]).is_err());
        assert!(ChiTable::new(-1, vec![1], vec![0.0, 0.0], vec![vec![0.1, 0.1]]).is_err());
        assert!(ChiTable::new(-1, vec![1], vec![0.0], vec![vec![1.5]]).is_err());
        assert!(ChiTable::new(-1, vec![1], vec![0.0], vec![vec![0.5, 0.5]]).is_err());
    }

    #[test]
    fn sweep_rejects_empty_grids() {
        let m = model();
        assert!(chi_sweep(-1, &[], &[0.0], &m).is_err());
        assert!(chi_sweep(-1, &[3], &[], &m).is_err());
    }

    #[test]
    fn sweep_matches_pointwise_and_writes_csv() {
        let m = model();
        let grid = [0.0, 1.0, 2.0];
        let t = chi_sweep(-1, &[3, 4], &grid, &m).unwrap();
        for l in [3, 4] {
            for zs in grid {
                assert_eq!(t.lookup(l, zs).unwrap(), m.chi(l, -1, zs).unwrap());
            }
        }
        let csv = t.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "l,m,zS_over_zR,chi");
        assert_eq!(lines.len(), 7);
        assert!(lines[1].starts_with("3,-1,0.000000000,"));
    }
}
