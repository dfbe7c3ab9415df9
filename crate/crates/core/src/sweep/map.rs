use rayon::prelude::*;

use super::search::{find_optimal_shift, Objective};
use crate::channel::{success_probability, QuditState};
use crate::error::{Error, Result};
use crate::numfmt::fmt10;
use crate::overlap::{chi_sweep, ChiSource};

/// Success probability of the uniform `d`-mode state rooted at each base OAM,
/// over a shift grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityMap {
    pub d: usize,
    pub m: i32,
    pub l_bases: Vec<i32>,
    pub zs_grid: Vec<f64>,
    /// `values[i][j]` is `p1` for `l_bases[i]` at `zs_grid[j]`.
    pub values: Vec<Vec<f64>>,
}

impl ProbabilityMap {
    /// CSV with header `l_base,zS_over_zR,p1`, rows ordered by base then shift.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("l_base,zS_over_zR,p1\n");
        for (l, row) in self.l_bases.iter().zip(&self.values) {
            for (zs, p) in self.zs_grid.iter().zip(row) {
                out.push_str(&format!("{l},{},{}\n", fmt10(*zs), fmt10(*p)));
            }
        }
        out
    }

    /// Grid shift of the largest `p1` for each base (smallest shift on ties).
    pub fn grid_argmax(&self) -> Vec<f64> {
        self.values
            .iter()
            .map(|row| {
                let best = row.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                let j = row.iter().position(|&p| p >= best - 1e-12).unwrap_or(0);
                self.zs_grid[j]
            })
            .collect()
    }
}

fn check_bases(d: usize, l_bases: &[i32]) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidDimension(d));
    }
    if l_bases.is_empty() {
        return Err(Error::InvalidInput("no base OAM values given".into()));
    }
    Ok(())
}

pub fn probability_map(
    d: usize,
    m: i32,
    l_bases: &[i32],
    zs_grid: &[f64],
    source: &(impl ChiSource + ?Sized),
) -> Result<ProbabilityMap> {
    check_bases(d, l_bases)?;
    let lo = *l_bases.iter().min().expect("non-empty");
    let hi = *l_bases.iter().max().expect("non-empty") + d as i32 - 1;
    let l_values: Vec<i32> = (lo..=hi).collect();
    let table = chi_sweep(m, &l_values, zs_grid, source)?;
    let values = l_bases
        .iter()
        .map(|&base| {
            (0..zs_grid.len())
                .map(|j| {
                    let chis: Vec<f64> = (base..base + d as i32)
                        .map(|l| table.row(l).expect("swept range covers every base")[j])
                        .collect();
                    success_probability(&chis)
                })
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ProbabilityMap {
        d,
        m,
        l_bases: l_bases.to_vec(),
        zs_grid: zs_grid.to_vec(),
        values,
    })
}

/// Probability-optimal shift for each base, refined between grid points
/// when the source allows it.
pub fn probability_ridge(
    d: usize,
    m: i32,
    l_bases: &[i32],
    zs_grid: &[f64],
    source: &(impl ChiSource + ?Sized),
) -> Result<Vec<f64>> {
    check_bases(d, l_bases)?;
    l_bases
        .par_iter()
        .map(|&base| {
            let state = QuditState::uniform(d, base)?;
            find_optimal_shift(&state, m, zs_grid, Objective::Probability, source)
                .map(|best| best.zs_over_zr)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}
