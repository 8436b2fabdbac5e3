use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::circuit::DENSE_QUBIT_CAP;
use crate::error::{Error, Result};
use crate::kg::{
    Component, EvolutionParams, KgSystem, MomentumConvention, PotentialProfile, Splitting,
    UnitSystem,
};
use crate::statevector::StateVector;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "preset", rename_all = "kebab-case", deny_unknown_fields)]
pub enum PotentialConfig {
    SigmaZBarrier { v0: f64 },
    ExplicitSites { site_values: Vec<f64> },
}

impl PotentialConfig {
    pub fn profile(&self, num_qubits: usize) -> PotentialProfile {
        match self {
            PotentialConfig::SigmaZBarrier { v0 } => {
                PotentialProfile::sigma_z_barrier(num_qubits, *v0)
            }
            PotentialConfig::ExplicitSites { site_values } => {
                PotentialProfile::explicit(site_values.clone())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InitialState {
    Site(usize),
    /// `[re, im]` pairs; normalized on load.
    Amplitudes(Vec<[f64; 2]>),
}

/// How successive rows of a sweep relate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    /// Every time starts again from the initial state with `r` steps.
    #[default]
    Independent,
    /// The state is carried forward; each interval gets `r` steps.
    Cumulative,
}

fn default_schema() -> u32 {
    1
}

fn default_kinetic_applications() -> u8 {
    2
}

/// Everything needed to reproduce a sweep. This is the JSON config format
/// read by the command-line tool and embedded in every trace file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default = "default_schema")]
    pub schema_version: u32,
    #[serde(default)]
    pub label: String,
    pub num_qubits: usize,
    #[serde(default)]
    pub units: UnitSystem,
    pub potential: PotentialConfig,
    /// Constant added to every site of `potential`.
    #[serde(default)]
    pub potential_offset: f64,
    pub component: Component,
    pub times: Vec<f64>,
    pub trotter_steps: usize,
    #[serde(default)]
    pub splitting: Splitting,
    #[serde(default = "default_kinetic_applications")]
    pub kinetic_applications: u8,
    #[serde(default)]
    pub convention: MomentumConvention,
    pub initial_state: InitialState,
    /// Site used for the transmission observable.
    pub barrier_site: usize,
    #[serde(default)]
    pub mode: SweepMode,
    #[serde(default)]
    pub seed: u64,
    /// Free-form documentation of the choices behind the numbers.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub notes: BTreeMap<String, String>,
}

/// A validated config turned into simulator objects.
#[derive(Clone, Debug)]
pub struct ResolvedExperiment {
    pub system: KgSystem,
    pub component: Component,
    pub initial: StateVector,
    pub times: Vec<f64>,
    pub trotter_steps: usize,
    pub splitting: Splitting,
    pub mode: SweepMode,
    pub barrier_site: usize,
}

impl ResolvedExperiment {
    pub fn params(&self, t: f64) -> EvolutionParams {
        EvolutionParams::new(t, self.trotter_steps, self.splitting)
    }
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: Self = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn num_sites(&self) -> usize {
        1 << self.num_qubits
    }

    pub fn validate(&self) -> Result<()> {
        self.resolve().map(|_| ())
    }

    pub fn resolve(&self) -> Result<ResolvedExperiment> {
        if self.schema_version != 1 {
            return Err(Error::Config(format!(
                "unsupported schema_version {}",
                self.schema_version
            )));
        }
        if self.num_qubits == 0 || self.num_qubits > DENSE_QUBIT_CAP {
            return Err(Error::QubitCountOutOfRange {
                n: self.num_qubits,
                min: 1,
                max: DENSE_QUBIT_CAP,
            });
        }
        if self.trotter_steps == 0 {
            return Err(Error::ZeroTrotterSteps);
        }
        if self.times.is_empty()
            || self.times.iter().any(|t| !t.is_finite())
            || self.times.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(Error::InvalidTimes);
        }
        let dim = self.num_sites();
        if self.barrier_site >= dim {
            return Err(Error::SiteOutOfRange {
                site: self.barrier_site,
                sites: dim,
            });
        }
        let profile = self.potential.profile(self.num_qubits);
        if profile.site_values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Config("potential values must be finite".into()));
        }
        let profile = profile.shifted(self.potential_offset);
        let system = KgSystem::new(
            self.num_qubits,
            self.units,
            profile,
            self.convention,
            self.kinetic_applications,
        )?;
        let initial = match &self.initial_state {
            InitialState::Site(j) => StateVector::basis_state(self.num_qubits, *j)?,
            InitialState::Amplitudes(a) => {
                if a.len() != dim {
                    return Err(Error::Config(format!(
                        "initial state has {} amplitudes, expected {dim}",
                        a.len()
                    )));
                }
                StateVector::normalized(a.iter().map(|[r, i]| Complex64::new(*r, *i)).collect())?
            }
        };
        Ok(ResolvedExperiment {
            system,
            component: self.component,
            initial,
            times: self.times.clone(),
            trotter_steps: self.trotter_steps,
            splitting: self.splitting,
            mode: self.mode,
            barrier_site: self.barrier_site,
        })
    }
}
