//! Reusable circuit blocks: the quantum Fourier transform and exact synthesis
//! of site-diagonal phase operators.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::circuit::{Circuit, Gate, DENSE_QUBIT_CAP};
use crate::error::{Error, Result};

/// Largest register `synthesize_diagonal` accepts.
pub const SYNTHESIS_QUBIT_CAP: usize = 6;

/// Diagonal unitary `diag(e^{iθ_j})` over the `2^n` sites.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagonalSpec {
    num_qubits: usize,
    phases: Vec<f64>,
}

impl DiagonalSpec {
    pub fn new(num_qubits: usize, phases: Vec<f64>) -> Result<Self> {
        let expected = 1usize << num_qubits;
        if phases.len() != expected {
            return Err(Error::DiagonalLength {
                expected,
                got: phases.len(),
            });
        }
        Ok(Self { num_qubits, phases })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    pub fn is_identity(&self) -> bool {
        self.phases.iter().all(|&p| p == 0.0)
    }

    /// The diagonal as a single reference gate.
    pub fn to_gate(&self) -> Gate {
        Gate::SiteDiagonalPhase(self.phases.clone())
    }
}

fn check_qft_size(n: usize) -> Result<()> {
    if n == 0 || n > DENSE_QUBIT_CAP {
        return Err(Error::QubitCountOutOfRange {
            n,
            min: 1,
            max: DENSE_QUBIT_CAP,
        });
    }
    Ok(())
}

/// Forward QFT, the unitary DFT with entry `(k, j) = e^{2πi kj/N}/√N`.
///
/// Built from `n` Hadamards and `n(n-1)/2` controlled phases, followed by
/// `⌊n/2⌋` swaps that undo the qubit reversal.
pub fn qft_circuit(n: usize) -> Result<Circuit> {
    qft_circuit_with(n, true)
}

/// Forward QFT; with `reverse_output = false` the final swaps are omitted and
/// the output appears in bit-reversed site order.
pub fn qft_circuit_with(n: usize, reverse_output: bool) -> Result<Circuit> {
    check_qft_size(n)?;
    let mut c = Circuit::new(n, format!("qft{n}"));
    for target in (0..n).rev() {
        c.push(Gate::Hadamard { target })?;
        for control in (0..target).rev() {
            c.push(Gate::ControlledPhase {
                control,
                target,
                angle: PI / (1u64 << (target - control)) as f64,
            })?;
        }
    }
    if reverse_output {
        for a in 0..n / 2 {
            c.push(Gate::Swap { a, b: n - 1 - a })?;
        }
    }
    Ok(c)
}

/// Conjugate transpose of [`qft_circuit`].
pub fn inverse_qft_circuit(n: usize) -> Result<Circuit> {
    Ok(qft_circuit(n)?.inverse().with_label(format!("iqft{n}")))
}

/// Exact synthesis of `diag(e^{iθ_j})` into elementary phase gates.
///
/// The phase function is expanded in the monomial basis of the site bits,
/// `θ(x) = Σ_{U ⊆ x} α_U`, by Möbius inversion over subsets. `α_∅` becomes a
/// global phase, singletons become phase gates, pairs become controlled
/// phases, and larger subsets become multi-controlled phases. Zero
/// coefficients are dropped.
pub fn synthesize_diagonal(spec: &DiagonalSpec) -> Result<Circuit> {
    let n = spec.num_qubits;
    if n == 0 || n > SYNTHESIS_QUBIT_CAP {
        return Err(Error::QubitCountOutOfRange {
            n,
            min: 1,
            max: SYNTHESIS_QUBIT_CAP,
        });
    }
    let mut coeffs = spec.phases.clone();
    for bit in 0..n {
        let b = 1usize << bit;
        for mask in 0..coeffs.len() {
            if mask & b != 0 {
                coeffs[mask] -= coeffs[mask ^ b];
            }
        }
    }

    let mut c = Circuit::new(n, "diagonal");
    // Emit by subset size so the circuit reads global, single, pair, ...
    let mut order: Vec<usize> = (0..coeffs.len()).collect();
    order.sort_by_key(|&m| (m.count_ones(), m));
    for mask in order {
        let angle = coeffs[mask];
        if angle == 0.0 {
            continue;
        }
        let qubits: Vec<usize> = (0..n).filter(|q| mask & (1 << q) != 0).collect();
        let gate = match qubits.as_slice() {
            [] => Gate::GlobalPhase(angle),
            [q] => Gate::Phase { target: *q, angle },
            [lo, hi] => Gate::ControlledPhase {
                control: *hi,
                target: *lo,
                angle,
            },
            _ => Gate::MultiControlledPhase { qubits, angle },
        };
        c.push(gate)?;
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::max_abs_diff;
    use crate::StateVector;
    use nalgebra::DMatrix;
    use num_complex::Complex64;

    /// DFT matrix straight from its definition.
    fn dft(n: usize) -> DMatrix<Complex64> {
        let dim = 1usize << n;
        let s = 1.0 / (dim as f64).sqrt();
        DMatrix::from_fn(dim, dim, |k, j| {
            Complex64::cis(2.0 * PI * ((k * j) % dim) as f64 / dim as f64) * s
        })
    }

    #[test]
    fn qft_one_qubit_is_hadamard() {
        let m = qft_circuit(1).unwrap().dense_matrix().unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let h = DMatrix::from_row_slice(2, 2, &[s, s, s, -s].map(|x| Complex64::new(x, 0.0)));
        assert!(max_abs_diff(&m, &h) < 1e-15);
        let mi = inverse_qft_circuit(1).unwrap().dense_matrix().unwrap();
        assert!(max_abs_diff(&mi, &h) < 1e-15);
    }

    #[test]
    fn qft_matches_dft_up_to_six_qubits() {
        for n in 1..=6 {
            let m = qft_circuit(n).unwrap().dense_matrix().unwrap();
            assert!(max_abs_diff(&m, &dft(n)) < 1e-12, "n = {n}");
            let mi = inverse_qft_circuit(n).unwrap().dense_matrix().unwrap();
            assert!(max_abs_diff(&mi, &dft(n).adjoint()) < 1e-12, "n = {n}");
        }
    }

    #[test]
    fn qft_three_qubit_entry() {
        let m = qft_circuit(3).unwrap().dense_matrix().unwrap();
        let want = Complex64::cis(PI / 4.0) / 8f64.sqrt();
        assert!((m[(1, 1)] - want).norm() < 1e-12);
    }

    #[test]
    fn swap_free_variant_is_bit_reversed() {
        let n = 3;
        let m = qft_circuit_with(n, false).unwrap().dense_matrix().unwrap();
        let d = dft(n);
        let rev = |k: usize| (0..n).fold(0, |acc, b| acc | (((k >> b) & 1) << (n - 1 - b)));
        for k in 0..8 {
            for j in 0..8 {
                assert!((m[(rev(k), j)] - d[(k, j)]).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn gate_counts() {
        for n in 1..=8 {
            let c = qft_circuit(n).unwrap().gate_counts();
            assert_eq!(c.hadamard, n);
            assert_eq!(c.controlled_phase, n * (n - 1) / 2);
            assert_eq!(c.swap, n / 2);
            assert_eq!(c.phase + c.multi_controlled_phase + c.global_phase, 0);
        }
    }

    #[test]
    fn qft_sizes_out_of_range() {
        assert!(qft_circuit(0).is_err());
        assert!(qft_circuit(13).is_err());
        assert!(inverse_qft_circuit(0).is_err());
    }

    #[test]
    fn inverse_qft_on_column_one() {
        // column 1 of the two-qubit QFT
        let amps = [(0.5, 0.0), (0.0, 0.5), (-0.5, 0.0), (0.0, -0.5)]
            .map(|(r, i)| Complex64::new(r, i))
            .to_vec();
        let mut s = StateVector::from_amplitudes(amps).unwrap();
        s.apply_circuit(&inverse_qft_circuit(2).unwrap()).unwrap();
        let want = StateVector::basis_state(2, 1).unwrap();
        assert!(s.distance(&want) < 1e-12);
    }

    #[test]
    fn qft_magnitudes_are_flat() {
        for n in 1..=5 {
            let qft = qft_circuit(n).unwrap();
            let dim = 1usize << n;
            for j in 0..dim {
                let mut s = StateVector::basis_state(n, j).unwrap();
                s.apply_circuit(&qft).unwrap();
                for a in s.amplitudes() {
                    assert!((a.norm() - 1.0 / (dim as f64).sqrt()).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn synthesize_single_corner_phase() {
        let theta = 0.37;
        let spec = DiagonalSpec::new(2, vec![0.0, 0.0, 0.0, theta]).unwrap();
        let c = synthesize_diagonal(&spec).unwrap();
        assert_eq!(
            c.gates(),
            &[Gate::ControlledPhase {
                control: 1,
                target: 0,
                angle: theta
            }]
        );
    }

    #[test]
    fn synthesize_kinetic_diagonal() {
        let a = PI * PI / 4.0;
        let phases: Vec<f64> = [0.0, 1.0, 4.0, 1.0].iter().map(|k| -a * k).collect();
        let spec = DiagonalSpec::new(2, phases.clone()).unwrap();
        let m = synthesize_diagonal(&spec).unwrap().dense_matrix().unwrap();
        let want = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            4,
            phases.iter().map(|p| Complex64::cis(*p)),
        ));
        assert!(max_abs_diff(&m, &want) < 1e-12);
    }

    #[test]
    fn synthesize_keeps_global_phase_and_uses_mcp() {
        let phases: Vec<f64> = (0..16).map(|j| 0.1 + 0.37 * (j as f64).powi(2)).collect();
        let spec = DiagonalSpec::new(4, phases.clone()).unwrap();
        let c = synthesize_diagonal(&spec).unwrap();
        assert!(matches!(c.gates()[0], Gate::GlobalPhase(g) if (g - 0.1).abs() < 1e-15));
        assert!(c.gate_counts().multi_controlled_phase > 0);
        let m = c.dense_matrix().unwrap();
        for j in 0..16 {
            assert!((m[(j, j)] - Complex64::cis(phases[j])).norm() < 1e-12);
        }
    }

    #[test]
    fn identity_diagonal_synthesizes_to_nothing() {
        let spec = DiagonalSpec::new(3, vec![0.0; 8]).unwrap();
        assert!(spec.is_identity());
        assert!(synthesize_diagonal(&spec).unwrap().is_empty());
    }

    #[test]
    fn diagonal_spec_errors() {
        assert!(matches!(
            DiagonalSpec::new(2, vec![0.0; 5]),
            Err(Error::DiagonalLength {
                expected: 4,
                got: 5
            })
        ));
        let big = DiagonalSpec::new(7, vec![0.0; 128]).unwrap();
        assert!(synthesize_diagonal(&big).is_err());
    }
}
