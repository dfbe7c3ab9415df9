use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::channel::{lossy_gate, GateOutcome, QuditState};
use crate::error::{Error, Result};
use crate::overlap::ChiSource;

/// Grid values closer than this count as ties.
const TIE_TOL: f64 = 1e-12;
const GOLDEN_MAX_ITER: usize = 200;
const GOLDEN_XTOL: f64 = 1e-10;

/// Quantity maximized over the shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Objective {
    #[default]
    Fidelity,
    Probability,
    /// `log2(d) * F * p1`.
    Merit,
}

impl Objective {
    pub fn name(&self) -> &'static str {
        match self {
            Objective::Fidelity => "fidelity",
            Objective::Probability => "probability",
            Objective::Merit => "merit",
        }
    }

    pub fn evaluate(&self, outcome: &GateOutcome) -> f64 {
        match self {
            Objective::Fidelity => outcome.fidelity,
            Objective::Probability => outcome.p1,
            Objective::Merit => merit(outcome.dim(), outcome.fidelity, outcome.p1),
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fidelity" => Ok(Objective::Fidelity),
            "probability" => Ok(Objective::Probability),
            "merit" => Ok(Objective::Merit),
            _ => Err(Error::Parse(format!(
                "unknown objective '{s}' (expected fidelity, probability or merit)"
            ))),
        }
    }
}

pub fn merit(d: usize, fidelity: f64, probability: f64) -> f64 {
    (d as f64).log2() * fidelity * probability
}

/// Best shift found by [`find_optimal_shift`].
#[derive(Debug, Clone, PartialEq)]
pub struct OptimalShift {
    pub zs_over_zr: f64,
    pub value: f64,
    pub outcome: GateOutcome,
    /// Whether golden-section refinement moved the point off the grid.
    pub refined: bool,
}

/// Maximize `objective` over `grid`, then refine inside the bracket around
/// the best grid point when `source` is defined between grid points.
///
/// Among grid points within 1e-12 of the maximum the smallest shift wins.
/// Refinement is kept only if it strictly improves on that grid point.
pub fn find_optimal_shift(
    state: &QuditState,
    m: i32,
    grid: &[f64],
    objective: Objective,
    source: &(impl ChiSource + ?Sized),
) -> Result<OptimalShift> {
    if grid.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "shift search needs at least 2 grid points, got {}",
            grid.len()
        )));
    }
    if grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidInput(
            "zS grid must be strictly increasing".into(),
        ));
    }
    let evaluate = |zs: f64| -> Result<(f64, GateOutcome)> {
        let outcome = lossy_gate(state, m, source, zs).map_err(|e| at_point(e, zs))?;
        Ok((objective.evaluate(&outcome), outcome))
    };

    let scanned = grid
        .par_iter()
        .map(|&zs| evaluate(zs))
        .collect::<Vec<_>>()
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let best_value = scanned
        .iter()
        .map(|(v, _)| *v)
        .fold(f64::NEG_INFINITY, f64::max);
    let best = scanned
        .iter()
        .position(|(v, _)| *v >= best_value - TIE_TOL)
        .expect("grid is non-empty");
    let (grid_value, grid_outcome) = scanned[best].clone();

    let mut result = OptimalShift {
        zs_over_zr: grid[best],
        value: grid_value,
        outcome: grid_outcome,
        refined: false,
    };
    if !source.is_continuous() {
        return Ok(result);
    }

    let lo = grid[best.saturating_sub(1)];
    let hi = grid[(best + 1).min(grid.len() - 1)];
    let (zs, value, outcome) = golden_section_max(lo, hi, &evaluate)?;
    if value > result.value + TIE_TOL {
        result = OptimalShift {
            zs_over_zr: zs,
            value,
            outcome,
            refined: true,
        };
    }
    Ok(result)
}

fn at_point(e: Error, zs: f64) -> Error {
    match e {
        Error::NumericalAccuracy(msg) => {
            Error::NumericalAccuracy(format!("objective at zS/zR={zs}: {msg}"))
        }
        Error::DegenerateChannel { l } => Error::InvalidInput(format!(
            "objective undefined at zS/zR={zs}: chi = 0 for occupied mode l = {l}"
        )),
        other => other,
    }
}

fn golden_section_max(
    mut a: f64,
    mut b: f64,
    f: &impl Fn(f64) -> Result<(f64, GateOutcome)>,
) -> Result<(f64, f64, GateOutcome)> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut oc) = f(c)?;
    let (mut fd, mut od) = f(d)?;
    for _ in 0..GOLDEN_MAX_ITER {
        if (b - a).abs() <= GOLDEN_XTOL * (1.0 + c.abs()) {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            od = oc;
            c = b - inv_phi * (b - a);
            (fc, oc) = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            oc = od;
            d = a + inv_phi * (b - a);
            (fd, od) = f(d)?;
        }
    }
    Ok(if fc >= fd { (c, fc, oc) } else { (d, fd, od) })
}
