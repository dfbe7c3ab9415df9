//! Logical qudits on physical OAM modes and the lossy shift gate acting on them.

mod density;
mod encoding;
mod fidelity;
mod gate;
mod state;

pub use density::DensityMatrix;
pub use encoding::LogicalEncoding;
pub use fidelity::{fidelity, fidelity_pure};
pub use gate::{
    ideal_gate, lossy_gate, lossy_operator, single_photon_success_probability, success_probability,
    GateOutcome,
};
pub use state::QuditState;
