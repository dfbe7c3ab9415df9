use std::fmt::Write as _;

use super::presets::{preset, PRESET_NAMES};
use super::search::{find_optimal_shift, merit, Objective, OptimalShift};
use crate::error::{Error, Result};
use crate::numfmt::fmt10;
use crate::overlap::{BeamGeometry, Calibration, ChiModel, ChiSource, QuadratureSpec};

/// One dimension's line of the comparison table.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub d: usize,
    pub probability: f64,
    pub fidelity: f64,
    /// `log2(d) * F * P`.
    pub merit: f64,
    pub zs_over_zr: f64,
}

impl ComparisonRow {
    pub fn from_optimum(best: &OptimalShift) -> Self {
        let o = &best.outcome;
        Self {
            d: o.dim(),
            probability: o.p1,
            fidelity: o.fidelity,
            merit: merit(o.dim(), o.fidelity, o.p1),
            zs_over_zr: best.zs_over_zr,
        }
    }
}

/// Gate `x_d^m` compared across the built-in uniform states.
#[derive(Debug, Clone, PartialEq)]
pub struct DimensionComparison {
    pub m: i32,
    pub objective: Objective,
    pub rows: Vec<ComparisonRow>,
}

impl DimensionComparison {
    /// CSV with header `d,P,F,merit`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("d,P,F,merit\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                r.d,
                fmt10(r.probability),
                fmt10(r.fidelity),
                fmt10(r.merit)
            );
        }
        out
    }

    /// Aligned table with the chosen shift and `1 - F`, plus a footer naming
    /// the optimization rule.
    pub fn to_text(&self) -> String {
        let header = ["d", "zS/zR", "P", "F", "1-F", "log2(d)*F*P"];
        let cells: Vec<[String; 6]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.d.to_string(),
                    fmt10(r.zs_over_zr),
                    fmt10(r.probability),
                    fmt10(r.fidelity),
                    format!("{:.3e}", 1.0 - r.fidelity),
                    fmt10(r.merit),
                ]
            })
            .collect();
        let widths: Vec<usize> = (0..header.len())
            .map(|c| {
                cells
                    .iter()
                    .map(|row| row[c].len())
                    .chain([header[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |fields: &[&str]| -> String {
            let padded: Vec<String> = fields
                .iter()
                .zip(&widths)
                .map(|(f, w)| format!("{f:>w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };

        let mut out = format!("gate x_d^{} on uniform states over OAM 4..4+d-1\n", self.m);
        out.push_str(&line(&header));
        for row in &cells {
            let refs: Vec<&str> = row.iter().map(String::as_str).collect();
            out.push_str(&line(&refs));
        }
        let _ = writeln!(
            out,
            "# zS/zR chosen to maximize {}; P and F are reported at that same shift",
            self.objective
        );
        out
    }
}

/// Optimize the shift for each of `d2-uniform-base4` .. `d5-uniform-base4`.
pub fn dimension_comparison(
    m: i32,
    zs_grid: &[f64],
    objective: Objective,
    source: &(impl ChiSource + ?Sized),
) -> Result<DimensionComparison> {
    let rows = PRESET_NAMES
        .iter()
        .map(|name| {
            let state = preset(name)?;
            let best = find_optimal_shift(&state, m, zs_grid, objective, source)?;
            Ok(ComparisonRow::from_optimum(&best))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DimensionComparison { m, objective, rows })
}

/// Efficiency constant `kappa_|m|` that gives the `d3-uniform-base4` state
/// success probability `target_p` at its fidelity-optimal shift.
///
/// The fidelity depends only on ratios of the `chi`, so the optimal shift is
/// found once with the bare overlap and `p1 = kappa^6 p1_bare` is inverted.
pub fn calibrate_kappa(
    m: i32,
    target_p: f64,
    geom: BeamGeometry,
    quad: QuadratureSpec,
    zs_grid: &[f64],
) -> Result<f64> {
    if !(target_p > 0.0 && target_p <= 1.0) {
        return Err(Error::InvalidInput(format!(
            "target probability {target_p} outside (0, 1]"
        )));
    }
    let bare = ChiModel::new(geom, quad)?.with_calibration(Calibration::UNIT);
    let state = preset("d3-uniform-base4")?;
    let best = find_optimal_shift(&state, m, zs_grid, Objective::Fidelity, &bare)?;
    let p_bare = best.outcome.p1;
    let kappa = (target_p / p_bare).powf(1.0 / (2 * state.dim()) as f64);
    let largest = best.outcome.chis().into_iter().fold(0.0, f64::max);
    if kappa * largest > 1.0 {
        return Err(Error::InvalidInput(format!(
            "target probability {target_p} needs kappa = {kappa}, which pushes chi above 1"
        )));
    }
    Ok(kappa)
}
