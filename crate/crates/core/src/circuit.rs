//! Gate vocabulary and ordered gate sequences.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::statevector::StateVector;

/// Largest register `dense_matrix` will materialize.
pub const DENSE_QUBIT_CAP: usize = 12;

/// Every variant is a pure phase, a permutation, or a Hadamard, so each gate
/// is exactly unitary.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Gate {
    Hadamard {
        target: usize,
    },
    /// `diag(1, e^{iθ})` on `target`.
    Phase {
        target: usize,
        angle: f64,
    },
    /// Phase `e^{iθ}` on the `|11⟩` component of `(control, target)`.
    ControlledPhase {
        control: usize,
        target: usize,
        angle: f64,
    },
    /// Phase `e^{iθ}` on basis states where every listed qubit is 1.
    MultiControlledPhase {
        qubits: Vec<usize>,
        angle: f64,
    },
    Swap {
        a: usize,
        b: usize,
    },
    /// `e^{iθ_j}` on site `j`; one angle per basis state.
    SiteDiagonalPhase(Vec<f64>),
    GlobalPhase(f64),
}

impl Gate {
    pub fn validate(&self, num_qubits: usize) -> Result<()> {
        let in_range = |q: usize| {
            if q < num_qubits {
                Ok(())
            } else {
                Err(Error::QubitOutOfRange {
                    index: q,
                    num_qubits,
                })
            }
        };
        match self {
            Gate::Hadamard { target } | Gate::Phase { target, .. } => in_range(*target),
            Gate::ControlledPhase {
                control, target, ..
            } => {
                in_range(*control)?;
                in_range(*target)?;
                if control == target {
                    return Err(Error::RepeatedQubit(*target));
                }
                Ok(())
            }
            Gate::Swap { a, b } => {
                in_range(*a)?;
                in_range(*b)?;
                if a == b {
                    return Err(Error::RepeatedQubit(*a));
                }
                Ok(())
            }
            Gate::MultiControlledPhase { qubits, .. } => {
                let mut seen = 0usize;
                for &q in qubits {
                    in_range(q)?;
                    if seen & (1 << q) != 0 {
                        return Err(Error::RepeatedQubit(q));
                    }
                    seen |= 1 << q;
                }
                if qubits.is_empty() {
                    return Err(Error::Config(
                        "multi-controlled phase needs at least one qubit".into(),
                    ));
                }
                Ok(())
            }
            Gate::SiteDiagonalPhase(phases) => {
                let expected = 1usize << num_qubits;
                if phases.len() != expected {
                    return Err(Error::DiagonalLength {
                        expected,
                        got: phases.len(),
                    });
                }
                Ok(())
            }
            Gate::GlobalPhase(_) => Ok(()),
        }
    }

    /// Inverse gate: negated angles, Hadamard and Swap are self-inverse.
    pub fn inverse(&self) -> Gate {
        match self {
            Gate::Hadamard { .. } | Gate::Swap { .. } => self.clone(),
            Gate::Phase { target, angle } => Gate::Phase {
                target: *target,
                angle: -angle,
            },
            Gate::ControlledPhase {
                control,
                target,
                angle,
            } => Gate::ControlledPhase {
                control: *control,
                target: *target,
                angle: -angle,
            },
            Gate::MultiControlledPhase { qubits, angle } => Gate::MultiControlledPhase {
                qubits: qubits.clone(),
                angle: -angle,
            },
            Gate::SiteDiagonalPhase(phases) => {
                Gate::SiteDiagonalPhase(phases.iter().map(|p| -p).collect())
            }
            Gate::GlobalPhase(angle) => Gate::GlobalPhase(-angle),
        }
    }

    /// Applies the gate to an amplitude buffer that has already been checked
    /// against `validate`.
    pub(crate) fn apply_unchecked(&self, amps: &mut [Complex64]) {
        match self {
            Gate::Hadamard { target } => {
                let bit = 1usize << target;
                let s = std::f64::consts::FRAC_1_SQRT_2;
                for i in 0..amps.len() {
                    if i & bit == 0 {
                        let (a, b) = (amps[i], amps[i | bit]);
                        amps[i] = (a + b) * s;
                        amps[i | bit] = (a - b) * s;
                    }
                }
            }
            Gate::Phase { target, angle } => {
                phase_on_mask(amps, 1 << target, *angle);
            }
            Gate::ControlledPhase {
                control,
                target,
                angle,
            } => {
                phase_on_mask(amps, (1 << control) | (1 << target), *angle);
            }
            Gate::MultiControlledPhase { qubits, angle } => {
                let mask = qubits.iter().fold(0usize, |m, q| m | (1 << q));
                phase_on_mask(amps, mask, *angle);
            }
            Gate::Swap { a, b } => {
                let (ba, bb) = (1usize << a, 1usize << b);
                for i in 0..amps.len() {
                    if i & ba != 0 && i & bb == 0 {
                        amps.swap(i, (i & !ba) | bb);
                    }
                }
            }
            Gate::SiteDiagonalPhase(phases) => {
                for (amp, theta) in amps.iter_mut().zip(phases) {
                    *amp *= Complex64::cis(*theta);
                }
            }
            Gate::GlobalPhase(angle) => {
                let f = Complex64::cis(*angle);
                amps.iter_mut().for_each(|a| *a *= f);
            }
        }
    }
}

fn phase_on_mask(amps: &mut [Complex64], mask: usize, angle: f64) {
    let f = Complex64::cis(angle);
    for (i, a) in amps.iter_mut().enumerate() {
        if i & mask == mask {
            *a *= f;
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct GateCounts {
    pub hadamard: usize,
    pub phase: usize,
    pub controlled_phase: usize,
    pub multi_controlled_phase: usize,
    pub swap: usize,
    pub site_diagonal: usize,
    pub global_phase: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<Gate>,
    label: String,
}

impl Circuit {
    pub fn new(num_qubits: usize, label: impl Into<String>) -> Self {
        Self {
            num_qubits,
            gates: Vec::new(),
            label: label.into(),
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<&mut Self> {
        gate.validate(self.num_qubits)?;
        self.gates.push(gate);
        Ok(self)
    }

    /// Appends every gate of `other` after the gates already present.
    pub fn append(&mut self, other: &Circuit) -> Result<&mut Self> {
        if other.num_qubits != self.num_qubits {
            return Err(Error::QubitCountMismatch {
                state: self.num_qubits,
                circuit: other.num_qubits,
            });
        }
        self.gates.extend(other.gates.iter().cloned());
        Ok(self)
    }

    /// Reversed gate order with each gate inverted.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            num_qubits: self.num_qubits,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
            label: format!("{}^-1", self.label),
        }
    }

    pub fn gate_counts(&self) -> GateCounts {
        let mut c = GateCounts::default();
        for g in &self.gates {
            match g {
                Gate::Hadamard { .. } => c.hadamard += 1,
                Gate::Phase { .. } => c.phase += 1,
                Gate::ControlledPhase { .. } => c.controlled_phase += 1,
                Gate::MultiControlledPhase { .. } => c.multi_controlled_phase += 1,
                Gate::Swap { .. } => c.swap += 1,
                Gate::SiteDiagonalPhase(_) => c.site_diagonal += 1,
                Gate::GlobalPhase(_) => c.global_phase += 1,
            }
        }
        c
    }

    /// Dense `2^n × 2^n` unitary; column `j` is the circuit applied to `|j⟩`.
    pub fn dense_matrix(&self) -> Result<DMatrix<Complex64>> {
        if self.num_qubits == 0 || self.num_qubits > DENSE_QUBIT_CAP {
            return Err(Error::QubitCountOutOfRange {
                n: self.num_qubits,
                min: 1,
                max: DENSE_QUBIT_CAP,
            });
        }
        let dim = 1usize << self.num_qubits;
        let mut m = DMatrix::zeros(dim, dim);
        for j in 0..dim {
            let mut s = StateVector::basis_state(self.num_qubits, j)?;
            s.apply_circuit(self)?;
            m.set_column(j, &nalgebra::DVector::from_column_slice(s.amplitudes()));
        }
        Ok(m)
    }
}

/// Largest entry magnitude of `a - b`.
pub fn max_abs_diff(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
