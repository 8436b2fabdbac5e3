use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::circuit::DENSE_QUBIT_CAP;
use crate::error::{Error, Result};

/// Ordering of the negative-momentum branch.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MomentumConvention {
    /// `p_j = 2π/2^n · (2^{n-1} - j)` above the midpoint.
    #[default]
    Paper,
    /// `p_j = 2π/2^n · (j - 2^n)` above the midpoint, the usual FFT order.
    StandardFft,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentumTable {
    pub num_qubits: usize,
    pub convention: MomentumConvention,
    pub mass: f64,
    pub eigenvalues: Vec<f64>,
    /// `p_j^2 / 2m`.
    pub kinetic_diagonal: Vec<f64>,
}

/// Momentum grid for `n` qubits.
///
/// Both conventions agree up to `j = 2^{n-1}` and in `p_j^2` for `n <= 2`.
pub fn momentum_eigenvalues(
    num_qubits: usize,
    convention: MomentumConvention,
    mass: f64,
) -> Result<MomentumTable> {
    if num_qubits == 0 || num_qubits > DENSE_QUBIT_CAP {
        return Err(Error::QubitCountOutOfRange {
            n: num_qubits,
            min: 1,
            max: DENSE_QUBIT_CAP,
        });
    }
    if !(mass > 0.0 && mass.is_finite()) {
        return Err(Error::Config(format!("mass must be positive, got {mass}")));
    }
    let dim = 1usize << num_qubits;
    let half = dim / 2;
    let step = 2.0 * PI / dim as f64;
    let eigenvalues: Vec<f64> = (0..dim)
        .map(|j| {
            if j <= half {
                step * j as f64
            } else {
                match convention {
                    MomentumConvention::Paper => step * (half as f64 - j as f64),
                    MomentumConvention::StandardFft => step * (j as f64 - dim as f64),
                }
            }
        })
        .collect();
    let kinetic_diagonal = eigenvalues.iter().map(|p| p * p / (2.0 * mass)).collect();
    Ok(MomentumTable {
        num_qubits,
        convention,
        mass,
        eigenvalues,
        kinetic_diagonal,
    })
}
