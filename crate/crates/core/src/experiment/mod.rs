//! Time sweeps over the evolution, their summary observables and on-disk
//! format.

mod config;
mod convergence;
mod export;
mod grid;
mod sweep;
mod trace_io;

pub use config::{ExperimentConfig, InitialState, PotentialConfig, ResolvedExperiment, SweepMode};
pub use convergence::{error_ratios, oracle_convergence, ConvergenceRow};
pub use export::evolution_qasm;
pub use grid::{
    apply_knobs, knob_grid, run_grid, GridKnobs, GridOutcome, TunnelingChecks, TRANSMISSION_MARGIN,
};
pub use sweep::{
    argmax_site, expected_position, run_time_sweep, transmission_fraction, ProbabilityTrace,
    TraceMetadata, TRACE_SCHEMA_VERSION,
};
pub use trace_io::{load_trace, persist_trace, trace_from_str, trace_to_string};
