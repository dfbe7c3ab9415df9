//! Finite-dimensional qudit operator algebra: shift/clock operators, their
//! commutators, the Heisenberg-Weyl basis and matrix decompositions over it.

mod matrix;
mod pauli;
mod spectral;
mod text;
mod weyl;

pub use matrix::ComplexMatrix;
pub use pauli::{
    adjoint_power_identity_check, build_x, build_z, commutator, reduce_power, root_of_unity,
    shift_clock_commutator,
};
pub(crate) use spectral::clamp_eigenvalue;
pub use spectral::{
    apply_hermitian, hermitian_eigen, psd_sqrt, unitary_from_hermitian, EIGEN_FLOOR, HERMITIAN_TOL,
};
pub use text::{format_complex, parse_complex, parse_matrix, write_matrix};
pub use weyl::{
    decompose_hermitian, decompose_unitary, heisenberg_weyl, q_basis, DecompositionCoefficients,
    DecompositionKind,
};
