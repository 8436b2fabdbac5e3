use serde::{Deserialize, Serialize};

use super::momentum::{momentum_eigenvalues, MomentumConvention, MomentumTable};
use super::oracle::{ComponentOracle, FeshbachVillarsOracle};
use super::potential::{potential_phase, PotentialProfile, UnitSystem};
use crate::builders::{inverse_qft_circuit, qft_circuit, synthesize_diagonal, DiagonalSpec};
use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::statevector::{StateVector, NORM_TOLERANCE};

/// Which half of the two-component wavefunction is propagated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Component {
    /// φ: kinetic phase `e^{-iK dt}`, potential `V + mc²`.
    Particle,
    /// χ: kinetic phase `e^{+iK dt}`, potential `V - mc²`.
    #[serde(alias = "anti-particle")]
    AntiParticle,
}

impl Component {
    /// Sign of the kinetic term in the component Hamiltonian.
    pub fn kinetic_sign(self) -> f64 {
        match self {
            Component::Particle => 1.0,
            Component::AntiParticle => -1.0,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Splitting {
    /// Potential then kinetic: a first-order product.
    #[default]
    PaperOrder,
    /// Half potential, kinetic, half potential.
    Strang,
}

/// How diagonal phase operators appear in a step circuit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DiagonalLowering {
    /// One `SiteDiagonalPhase` gate per diagonal.
    #[default]
    Direct,
    /// Expanded into phase, controlled-phase and global-phase gates.
    Synthesized,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvolutionParams {
    pub total_time: f64,
    pub trotter_steps: usize,
    pub splitting: Splitting,
}

impl EvolutionParams {
    pub fn new(total_time: f64, trotter_steps: usize, splitting: Splitting) -> Self {
        Self {
            total_time,
            trotter_steps,
            splitting,
        }
    }

    pub fn dt(&self) -> f64 {
        self.total_time / self.trotter_steps as f64
    }
}

/// `θ_j = ∓ (p_j²/2m)·dt`, minus for the particle and plus for the
/// anti-particle.
pub fn kinetic_phase(table: &MomentumTable, dt: f64, component: Component) -> DiagonalSpec {
    let sign = -component.kinetic_sign();
    let phases = table
        .kinetic_diagonal
        .iter()
        .map(|k| sign * k * dt)
        .collect();
    DiagonalSpec::new(table.num_qubits, phases).expect("table has 2^n entries")
}

/// One lattice with its potential, units and kinetic multiplicity.
///
/// Each Trotter step applies the momentum-space kinetic phase
/// `kinetic_applications` times, so the propagated component Hamiltonian is
/// `±kinetic_applications·K + V ± mc²` with `K = F† diag(p²/2m) F`.
#[derive(Clone, Debug, PartialEq)]
pub struct KgSystem {
    pub table: MomentumTable,
    pub potential: PotentialProfile,
    pub units: UnitSystem,
    pub kinetic_applications: u8,
}

impl KgSystem {
    pub fn new(
        num_qubits: usize,
        units: UnitSystem,
        potential: PotentialProfile,
        convention: MomentumConvention,
        kinetic_applications: u8,
    ) -> Result<Self> {
        let table = momentum_eigenvalues(num_qubits, convention, units.mass)?;
        if potential.num_sites() != 1 << num_qubits {
            return Err(Error::Config(format!(
                "potential has {} sites but the lattice has {}",
                potential.num_sites(),
                1usize << num_qubits
            )));
        }
        if !(1..=2).contains(&kinetic_applications) {
            return Err(Error::KineticApplications(kinetic_applications));
        }
        Ok(Self {
            table,
            potential,
            units,
            kinetic_applications,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.table.num_qubits
    }

    pub fn with_potential(&self, potential: PotentialProfile) -> Result<Self> {
        Self::new(
            self.num_qubits(),
            self.units,
            potential,
            self.table.convention,
            self.kinetic_applications,
        )
    }

    pub fn kinetic_phase(&self, dt: f64, component: Component) -> DiagonalSpec {
        kinetic_phase(&self.table, dt, component)
    }

    pub fn potential_phase(&self, dt: f64, component: Component) -> Result<DiagonalSpec> {
        potential_phase(&self.potential, &self.units, dt, component)
    }

    /// One Trotter step of length `dt`.
    ///
    /// Application order for [`Splitting::PaperOrder`] is the potential phase, then
    /// `kinetic_applications` copies of QFT, kinetic phase, inverse QFT. The
    /// Strang ordering splits the potential into two half steps around the
    /// kinetic blocks. Identity diagonals and the QFT pair around an
    /// identity kinetic phase are left out.
    pub fn trotter_step_circuit(
        &self,
        component: Component,
        dt: f64,
        splitting: Splitting,
        lowering: DiagonalLowering,
    ) -> Result<Circuit> {
        let n = self.num_qubits();
        let mut c = Circuit::new(
            n,
            format!(
                "trotter-step {component:?} dt={dt} {splitting:?} x{}",
                self.kinetic_applications
            ),
        );
        let push_diag = |c: &mut Circuit, d: &DiagonalSpec| -> Result<()> {
            if d.is_identity() {
                return Ok(());
            }
            match lowering {
                DiagonalLowering::Direct => {
                    c.push(d.to_gate())?;
                }
                DiagonalLowering::Synthesized => {
                    c.append(&synthesize_diagonal(d)?)?;
                }
            }
            Ok(())
        };

        let kinetic = self.kinetic_phase(dt, component);
        let mut kinetic_block = Circuit::new(n, "kinetic");
        if !kinetic.is_identity() {
            kinetic_block.append(&qft_circuit(n)?)?;
            push_diag(&mut kinetic_block, &kinetic)?;
            kinetic_block.append(&inverse_qft_circuit(n)?)?;
        }

        match splitting {
            Splitting::PaperOrder => {
                push_diag(&mut c, &self.potential_phase(dt, component)?)?;
                for _ in 0..self.kinetic_applications {
                    c.append(&kinetic_block)?;
                }
            }
            Splitting::Strang => {
                let half = self.potential_phase(dt / 2.0, component)?;
                push_diag(&mut c, &half)?;
                for _ in 0..self.kinetic_applications {
                    c.append(&kinetic_block)?;
                }
                push_diag(&mut c, &half)?;
            }
        }
        Ok(c)
    }

    /// The full `r`-step circuit for total time `t`.
    pub fn evolution_circuit(
        &self,
        component: Component,
        params: &EvolutionParams,
        lowering: DiagonalLowering,
    ) -> Result<Circuit> {
        if params.trotter_steps == 0 {
            return Err(Error::ZeroTrotterSteps);
        }
        let step = self.trotter_step_circuit(component, params.dt(), params.splitting, lowering)?;
        let mut c = Circuit::new(
            self.num_qubits(),
            format!(
                "kg {component:?} t={} r={} {:?} x{}",
                params.total_time,
                params.trotter_steps,
                params.splitting,
                self.kinetic_applications
            ),
        );
        for _ in 0..params.trotter_steps {
            c.append(&step)?;
        }
        Ok(c)
    }

    /// Applies the step circuit `r` times with `dt = t/r`.
    pub fn evolve(
        &self,
        initial: &StateVector,
        component: Component,
        params: &EvolutionParams,
    ) -> Result<StateVector> {
        if params.trotter_steps == 0 {
            return Err(Error::ZeroTrotterSteps);
        }
        let step = self.trotter_step_circuit(
            component,
            params.dt(),
            params.splitting,
            DiagonalLowering::Direct,
        )?;
        let mut state = initial.clone();
        for _ in 0..params.trotter_steps {
            state.apply_circuit(&step)?;
        }
        let drift = (state.norm() - initial.norm()).abs();
        if drift > NORM_TOLERANCE {
            return Err(Error::NormDrift { drift });
        }
        Ok(state)
    }

    pub fn component_oracle(&self, component: Component) -> Result<ComponentOracle> {
        ComponentOracle::new(self, component)
    }

    pub fn feshbach_villars_oracle(&self) -> Result<FeshbachVillarsOracle> {
        FeshbachVillarsOracle::new(self)
    }
}
