#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use oam_qudit::algebra::ComplexMatrix;
use oam_qudit::channel::QuditState;
use oam_qudit::overlap::{lg_amplitude, lg_peak_amplitude, BeamGeometry, Calibration, ChiTable};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_square(rng: &mut ChaCha8Rng, d: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(d, d, |_, _| random_complex(rng))
}

pub fn random_hermitian(rng: &mut ChaCha8Rng, d: usize) -> ComplexMatrix {
    let m = random_square(rng, d);
    ComplexMatrix::new((&m + m.adjoint()) * Complex64::new(0.5, 0.0)).unwrap()
}

/// Q factor of a random complex matrix.
pub fn random_unitary(rng: &mut ChaCha8Rng, d: usize) -> ComplexMatrix {
    ComplexMatrix::new(random_square(rng, d).qr().q()).unwrap()
}

/// Normalized state with every amplitude bounded away from zero.
pub fn random_state(rng: &mut ChaCha8Rng, d: usize, base: i32) -> QuditState {
    let amps = (0..d)
        .map(|_| {
            let r = rng.random_range(0.2..1.0);
            Complex64::from_polar(r, rng.random_range(0.0..std::f64::consts::TAU))
        })
        .collect();
    QuditState::normalized(base, amps).unwrap()
}

/// Single-shift table holding `chis` for OAM `base..base + len`.
pub fn fixed_chis(m: i32, base: i32, zs: f64, chis: &[f64]) -> ChiTable {
    ChiTable::new(
        m,
        (0..chis.len() as i32).map(|i| base + i).collect(),
        vec![zs],
        chis.iter().map(|&c| vec![c]).collect(),
    )
    .unwrap()
}

/// `exp(iA)` summed as a power series.
pub fn taylor_exp_i(a: &ComplexMatrix, terms: usize) -> ComplexMatrix {
    let d = a.dim();
    let ia = a.scale(Complex64::new(0.0, 1.0));
    let mut term = ComplexMatrix::identity(d).unwrap();
    let mut sum = term.clone();
    for n in 1..terms {
        term = (&term * &ia).scale(Complex64::new(1.0 / n as f64, 0.0));
        sum = &sum + &term;
    }
    sum
}

/// chi from the full two-dimensional overlap: composite Simpson in r and the
/// periodic trapezoid rule in phi, on the complete LG fields.
pub fn brute_force_chi(l: i32, m: i32, zs: f64, geom: &BeamGeometry, cal: Calibration) -> f64 {
    let z = geom.shift(zs);
    let r_cut = 8.0
        * geom
            .mode_radius(l - m, 0.0)
            .max(geom.mode_radius(l, 0.0))
            .max(geom.mode_radius(m, z));
    let (nr, nphi) = (4000usize, 24usize);
    let h = r_cut / nr as f64;
    let dphi = std::f64::consts::TAU / nphi as f64;
    let mut total = Complex64::new(0.0, 0.0);
    for i in 0..=nr {
        let r = i as f64 * h;
        let w = if i == 0 || i == nr {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        let mut ring = Complex64::new(0.0, 0.0);
        for k in 0..nphi {
            let phi = k as f64 * dphi;
            let out = lg_amplitude(l - m, 0, geom, r, phi, 0.0).unwrap();
            let sig = lg_amplitude(l, 0, geom, r, phi, 0.0).unwrap();
            let drive = lg_amplitude(m, 0, geom, r, phi, z).unwrap();
            ring += out.conj() * sig * drive.conj();
        }
        total += ring * dphi * r * w;
    }
    let integral = total * (h / 3.0);
    (cal.kappa(m) * integral.norm() / lg_peak_amplitude(m, geom, z)).clamp(0.0, 1.0)
}
