//! Dense reference propagators, built from matrices and independent of the
//! gate-level circuits.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector, Matrix2, SymmetricEigen};
use num_complex::Complex64;

use super::trotter::{Component, KgSystem};
use crate::error::{Error, Result};
use crate::statevector::StateVector;

/// Largest lattice the component oracle accepts; the two-component oracle
/// accepts one qubit fewer.
pub const ORACLE_QUBIT_CAP: usize = 8;

/// Unitary DFT matrix, entry `(k, j) = e^{2πi kj/N}/√N`, from its definition.
pub fn dft_matrix(num_qubits: usize) -> DMatrix<Complex64> {
    let dim = 1usize << num_qubits;
    let s = 1.0 / (dim as f64).sqrt();
    DMatrix::from_fn(dim, dim, |k, j| {
        Complex64::cis(2.0 * PI * ((k * j) % dim) as f64 / dim as f64) * s
    })
}

/// `K = F† diag(p²/2m) F`.
fn kinetic_matrix(system: &KgSystem) -> DMatrix<Complex64> {
    let f = dft_matrix(system.num_qubits());
    let d = DMatrix::from_diagonal(&DVector::from_iterator(
        f.nrows(),
        system
            .table
            .kinetic_diagonal
            .iter()
            .map(|&k| Complex64::new(k, 0.0)),
    ));
    f.adjoint() * d * f
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::QubitCountOutOfRange {
            n,
            min: 1,
            max: cap,
        });
    }
    Ok(())
}

/// Exact propagator of the decoupled component Hamiltonian
/// `H = ±a·K + diag(V ± mc²)`, `a` the kinetic multiplicity, via a Hermitian
/// eigendecomposition computed once.
#[derive(Clone, Debug)]
pub struct ComponentOracle {
    pub hamiltonian: DMatrix<Complex64>,
    pub eigenvalues: DVector<f64>,
    pub eigenvectors: DMatrix<Complex64>,
}

impl ComponentOracle {
    pub fn new(system: &KgSystem, component: Component) -> Result<Self> {
        check_cap(system.num_qubits(), ORACLE_QUBIT_CAP)?;
        let scale = component.kinetic_sign() * f64::from(system.kinetic_applications);
        let mut h = kinetic_matrix(system) * Complex64::new(scale, 0.0);
        let shift = system.units.potential_shift(component);
        for (j, v) in system.potential.site_values.iter().enumerate() {
            h[(j, j)] += Complex64::new(v + shift, 0.0);
        }
        // remove rounding asymmetry from the F† D F product
        let h = (&h + h.adjoint()) * Complex64::new(0.5, 0.0);
        let eig = SymmetricEigen::new(h.clone());
        Ok(Self {
            hamiltonian: h,
            eigenvalues: eig.eigenvalues,
            eigenvectors: eig.eigenvectors,
        })
    }

    /// Largest entry of `H - H†`.
    pub fn hermiticity_error(&self) -> f64 {
        (&self.hamiltonian - self.hamiltonian.adjoint())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// `e^{-iHt} = U e^{-iΛt} U†`.
    pub fn propagator(&self, t: f64) -> DMatrix<Complex64> {
        let phases = DMatrix::from_diagonal(&DVector::from_iterator(
            self.eigenvalues.len(),
            self.eigenvalues.iter().map(|&l| Complex64::cis(-l * t)),
        ));
        &self.eigenvectors * phases * self.eigenvectors.adjoint()
    }

    pub fn evolve(&self, initial: &StateVector, t: f64) -> Result<StateVector> {
        let psi = DVector::from_column_slice(initial.amplitudes());
        let out = self.propagator(t) * psi;
        StateVector::from_amplitudes(out.iter().copied().collect())
    }
}

/// The coupled two-component Hamiltonian over `(φ, χ)`:
///
/// ```text
/// H = [ K + mc² + V      K          ]
///     [ -K               -K - mc² + V ]
/// ```
///
/// i.e. `(σ₃ + iσ₂)⊗K + σ₃⊗mc² + I⊗V` with a single kinetic term. `H` is not
/// Hermitian, so the propagator uses a general matrix exponential.
#[derive(Clone, Debug)]
pub struct FeshbachVillarsOracle {
    pub num_sites: usize,
    pub hamiltonian: DMatrix<Complex64>,
}

impl FeshbachVillarsOracle {
    pub fn new(system: &KgSystem) -> Result<Self> {
        check_cap(system.num_qubits(), ORACLE_QUBIT_CAP - 1)?;
        let k = kinetic_matrix(system);
        let n = k.nrows();
        let mc2 = if system.units.include_rest_energy {
            system.units.rest_energy()
        } else {
            0.0
        };
        let mut h = DMatrix::zeros(2 * n, 2 * n);
        h.view_mut((0, 0), (n, n)).copy_from(&k);
        h.view_mut((0, n), (n, n)).copy_from(&k);
        h.view_mut((n, 0), (n, n)).copy_from(&(-&k));
        h.view_mut((n, n), (n, n)).copy_from(&(-&k));
        for (j, v) in system.potential.site_values.iter().enumerate() {
            h[(j, j)] += Complex64::new(mc2 + v, 0.0);
            h[(n + j, n + j)] += Complex64::new(-mc2 + v, 0.0);
        }
        Ok(Self {
            num_sites: n,
            hamiltonian: h,
        })
    }

    pub fn trace(&self) -> Complex64 {
        self.hamiltonian.trace()
    }

    /// `e^{-iHt}` by scaling and squaring.
    pub fn propagator(&self, t: f64) -> DMatrix<Complex64> {
        (&self.hamiltonian * Complex64::new(0.0, -t)).exp()
    }

    /// `H` projected onto the zero-momentum plane wave in each component.
    pub fn zero_momentum_block(&self) -> Matrix2<Complex64> {
        let n = self.num_sites;
        let u = DVector::from_element(n, Complex64::new(1.0 / (n as f64).sqrt(), 0.0));
        let block = |r: usize, c: usize| {
            let b = self.hamiltonian.view((r * n, c * n), (n, n));
            (u.adjoint() * b * &u)[(0, 0)]
        };
        Matrix2::new(block(0, 0), block(0, 1), block(1, 0), block(1, 1))
    }

    /// Eigenvalues of [`Self::zero_momentum_block`], ascending by real part.
    pub fn zero_momentum_energies(&self) -> [Complex64; 2] {
        let m = self.zero_momentum_block();
        let half_tr = (m[(0, 0)] + m[(1, 1)]) / 2.0;
        let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
        let disc = (half_tr * half_tr - det).sqrt();
        let (a, b) = (half_tr - disc, half_tr + disc);
        if a.re <= b.re {
            [a, b]
        } else {
            [b, a]
        }
    }

    /// Full spectrum from a complex Schur decomposition, if it converges.
    pub fn spectrum(&self) -> Option<Vec<Complex64>> {
        let schur = nalgebra::Schur::new(self.hamiltonian.clone());
        schur.eigenvalues().map(|v| v.iter().copied().collect())
    }
}
