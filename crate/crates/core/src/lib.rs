//! State-vector simulation of Trotterized Klein–Gordon dynamics on a qubit
//! lattice: gate-level circuits, QFT-based kinetic propagators, dense
//! reference propagators and time-sweep experiments.

pub mod builders;
pub mod circuit;
pub mod error;
pub mod experiment;
pub mod heatmap;
pub mod kg;
pub mod qasm;
pub mod statevector;

pub use builders::{inverse_qft_circuit, qft_circuit, synthesize_diagonal, DiagonalSpec};
pub use circuit::{Circuit, Gate};
pub use error::{Error, Result};
pub use statevector::StateVector;
