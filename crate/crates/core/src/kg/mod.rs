//! Klein–Gordon lattice dynamics: momentum grid, phase operators, Trotterized
//! component propagators and dense reference propagators.

mod momentum;
mod oracle;
mod potential;
mod trotter;

pub use momentum::{momentum_eigenvalues, MomentumConvention, MomentumTable};
pub use oracle::{dft_matrix, ComponentOracle, FeshbachVillarsOracle, ORACLE_QUBIT_CAP};
pub use potential::{potential_phase, PotentialPreset, PotentialProfile, UnitSystem};
pub use trotter::{
    kinetic_phase, Component, DiagonalLowering, EvolutionParams, KgSystem, Splitting,
};
