//! Dense state vectors over a lattice of `2^n` sites.
//!
//! Basis index `j` is lattice site `j`, with qubit 0 as the least significant
//! bit of `j`.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};

/// Largest register the crate will allocate.
pub const MAX_QUBITS: usize = 24;

/// Accumulated norm tolerance after any gate sequence.
pub const NORM_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Computational basis state `|j⟩` on `n` qubits.
    pub fn basis_state(num_qubits: usize, site: usize) -> Result<Self> {
        check_qubits(num_qubits)?;
        let dim = 1usize << num_qubits;
        if site >= dim {
            return Err(Error::SiteOutOfRange { site, sites: dim });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[site] = Complex64::new(1.0, 0.0);
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    /// Wraps an explicit amplitude list. The length must be a power of two
    /// and the vector must already be normalized.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let dim = amplitudes.len();
        if dim < 2 || !dim.is_power_of_two() {
            return Err(Error::Config(format!(
                "amplitude count {dim} is not a power of two >= 2"
            )));
        }
        let num_qubits = dim.trailing_zeros() as usize;
        check_qubits(num_qubits)?;
        let state = Self {
            num_qubits,
            amplitudes,
        };
        let norm = state.norm();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized { norm });
        }
        Ok(state)
    }

    /// Rescales an arbitrary non-zero vector to unit norm.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized { norm });
        }
        Self::from_amplitudes(amplitudes.into_iter().map(|a| a / norm).collect())
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Applies one gate in place.
    pub fn apply_gate(&mut self, gate: &Gate) -> Result<()> {
        gate.validate(self.num_qubits)?;
        gate.apply_unchecked(&mut self.amplitudes);
        Ok(())
    }

    /// Applies the gates of `circuit` left to right.
    pub fn apply_circuit(&mut self, circuit: &Circuit) -> Result<()> {
        if circuit.num_qubits() != self.num_qubits {
            return Err(Error::QubitCountMismatch {
                state: self.num_qubits,
                circuit: circuit.num_qubits(),
            });
        }
        // Circuits validate their gates on push.
        for gate in circuit.gates() {
            gate.apply_unchecked(&mut self.amplitudes);
        }
        Ok(())
    }

    /// `|amplitude_j|^2` for every site.
    pub fn site_probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Draws `shots` computational-basis measurements. Only observed sites
    /// appear in the histogram.
    pub fn sample_measurements(&self, shots: u64, seed: u64) -> Result<BTreeMap<usize, u64>> {
        if shots == 0 {
            return Err(Error::ZeroShots);
        }
        let weights = self.site_probabilities();
        let dist =
            WeightedIndex::new(&weights).map_err(|_| Error::NotNormalized { norm: self.norm() })?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut counts = BTreeMap::new();
        for _ in 0..shots {
            *counts.entry(dist.sample(&mut rng)).or_insert(0) += 1;
        }
        Ok(counts)
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Euclidean distance between amplitude vectors.
    pub fn distance(&self, other: &StateVector) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

fn check_qubits(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::QubitCountOutOfRange {
            n,
            min: 1,
            max: MAX_QUBITS,
        });
    }
    Ok(())
}
