//! Fast invariant checks runnable from the command line.

use num_complex::Complex64;

use crate::algebra::{
    adjoint_power_identity_check, build_x, build_z, commutator, decompose_hermitian,
    decompose_unitary, q_basis, shift_clock_commutator, unitary_from_hermitian, ComplexMatrix,
};
use crate::channel::{fidelity, fidelity_pure, ideal_gate, lossy_gate, DensityMatrix, QuditState};
use crate::error::{Error, Result};
use crate::overlap::{BeamGeometry, ChiModel, ChiSource, ChiTable, QuadratureSpec};

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub outcome: Result<()>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }

    pub fn line(&self) -> String {
        match &self.outcome {
            Ok(()) => format!("ok    {}", self.name),
            Err(e) => format!("FAIL  {}: {e}", self.name),
        }
    }
}

type Check = fn() -> Result<()>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::NumericalAccuracy(what()))
    }
}

/// Dense Hermitian test matrix with no special structure.
fn sample_hermitian(d: usize) -> Result<ComplexMatrix> {
    let mut a = ComplexMatrix::zeros(d)?;
    for j in 0..d {
        for k in 0..d {
            let w = 0.3 + (j as f64 * 1.7 + k as f64 * 0.9).sin();
            a = &a + &q_basis(d, j, k)?.scale(Complex64::new(w, 0.0));
        }
    }
    Ok(a)
}

fn powers_close() -> Result<()> {
    for d in 2..=7 {
        let xd = build_x(d, d as i64)?;
        let zd = build_z(d, d as i64)?;
        ensure(xd.is_identity(0.0) && zd.is_identity(1e-13), || {
            format!("X^d or Z^d is not the identity at d={d}")
        })?;
        for k in 1..d as i64 {
            ensure(adjoint_power_identity_check(d, k), || {
                format!("adjoint power identity fails at d={d}, k={k}")
            })?;
        }
    }
    Ok(())
}

fn commutators() -> Result<()> {
    for d in 2..=7 {
        for k in 1..d as i64 {
            for m in 1..d as i64 {
                let direct = commutator(&build_x(d, k)?, &build_z(d, m)?)?;
                let built = shift_clock_commutator(d, k, m)?;
                let err = direct.max_abs_diff(&built);
                ensure(err < 1e-13, || {
                    format!("d={d} k={k} m={m}: deviation {err:e}")
                })?;
            }
        }
    }
    Ok(())
}

fn round_trips() -> Result<()> {
    for d in 2..=5 {
        let h = sample_hermitian(d)?;
        let err = decompose_hermitian(&h)?.reconstruct()?.max_abs_diff(&h);
        ensure(err < 1e-10, || {
            format!("Hermitian round trip at d={d}: {err:e}")
        })?;
        let u = unitary_from_hermitian(&h)?;
        let err = decompose_unitary(&u)?.reconstruct()?.max_abs_diff(&u);
        ensure(err < 1e-10, || {
            format!("unitary round trip at d={d}: {err:e}")
        })?;
    }
    Ok(())
}

fn chi_bounds_and_refinement() -> Result<()> {
    let geom = BeamGeometry::default();
    let model = ChiModel::new(geom, QuadratureSpec::default())?;
    let fine = ChiModel::new(geom, QuadratureSpec::default().refined())?;
    for (l, m, zs) in [
        (0, -1, 0.5),
        (4, -1, 2.3),
        (6, -2, 1.6),
        (10, -1, 3.0),
        (3, 2, 1.0),
    ] {
        let a = model.chi(l, m, zs)?;
        let b = fine.chi(l, m, zs)?;
        ensure((0.0..=1.0).contains(&a), || {
            format!("chi_{{{l},{m}}}({zs}) = {a}")
        })?;
        ensure((a - b).abs() <= 1e-8, || {
            format!(
                "chi_{{{l},{m}}}({zs}) moves by {:e} under refinement",
                (a - b).abs()
            )
        })?;
    }
    Ok(())
}

fn channel_oracle() -> Result<()> {
    let state = QuditState::uniform(2, 4)?;
    let table = ChiTable::new(-1, vec![4, 5], vec![1.0], vec![vec![0.9], vec![0.8]])?;
    let out = lossy_gate(&state, -1, &table, 1.0)?;
    ensure((out.p1 - 0.5184).abs() < 1e-12, || {
        format!("p1 = {}", out.p1)
    })?;
    ensure((out.fidelity - 0.7225 / 0.725).abs() < 1e-10, || {
        format!("F = {}", out.fidelity)
    })?;
    let ideal = ideal_gate(&state, -1);
    let shortcut = fidelity_pure(ideal.amplitudes(), &out.rho1)?;
    let full = fidelity(&DensityMatrix::from_pure(&ideal), &out.rho1)?;
    ensure((shortcut - full).abs() < 1e-10, || {
        format!("{shortcut} vs {full}")
    })
}

pub fn run_selftest() -> Vec<CheckResult> {
    let checks: [(&'static str, Check); 5] = [
        ("shift and clock powers", powers_close),
        ("commutator construction", commutators),
        ("decomposition round trips", round_trips),
        ("chi bounds and refinement", chi_bounds_and_refinement),
        ("lossy gate oracle", channel_oracle),
    ];
    checks
        .iter()
        .map(|(name, f)| CheckResult { name, outcome: f() })
        .collect()
}
