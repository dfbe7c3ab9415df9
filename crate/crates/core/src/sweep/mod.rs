//! Shift sweeps, optimal-point search, probability maps and the
//! cross-dimension comparison table.

mod comparison;
mod config;
mod grid;
mod map;
mod output;
mod presets;
mod search;
mod selftest;

pub use comparison::{calibrate_kappa, dimension_comparison, ComparisonRow, DimensionComparison};
pub use config::{load_state, parse_state, SweepConfig, CONFIG_KEYS};
pub use grid::ZsGrid;
pub use map::{probability_map, probability_ridge, ProbabilityMap};
pub use output::write_atomic;
pub use presets::{preset, PRESET_NAMES};
pub use search::{find_optimal_shift, merit, Objective, OptimalShift};
pub use selftest::{run_selftest, CheckResult};
