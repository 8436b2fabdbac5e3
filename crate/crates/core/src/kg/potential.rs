use serde::{Deserialize, Serialize};

use super::trotter::Component;
use crate::builders::DiagonalSpec;
use crate::error::{Error, Result};

/// Natural units with `ħ = 1`.
///
/// The default mass 0.5 with `c² = 2` gives a rest energy `mc² = 1`, so the
/// component potentials are `V₁ = V + 1` and `V₂ = V - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct UnitSystem {
    pub mass: f64,
    pub c_squared: f64,
    /// When false the `±mc²` shift is left out of the component potentials.
    pub include_rest_energy: bool,
}

impl Default for UnitSystem {
    fn default() -> Self {
        Self {
            mass: 0.5,
            c_squared: 2.0,
            include_rest_energy: true,
        }
    }
}

impl UnitSystem {
    pub fn rest_energy(&self) -> f64 {
        self.mass * self.c_squared
    }

    /// The constant added to `V` for `component`: `+mc²` for the particle,
    /// `-mc²` for the anti-particle, zero if disabled.
    pub fn potential_shift(&self, component: Component) -> f64 {
        if !self.include_rest_energy {
            return 0.0;
        }
        match component {
            Component::Particle => self.rest_energy(),
            Component::AntiParticle => -self.rest_energy(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PotentialPreset {
    /// `I ⊗ σ_z` on qubit 0: `+V₀` on even sites, `-V₀` on odd sites.
    SigmaZBarrier,
    ExplicitSites,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PotentialProfile {
    pub preset: PotentialPreset,
    pub v0: f64,
    pub site_values: Vec<f64>,
}

impl PotentialProfile {
    pub fn sigma_z_barrier(num_qubits: usize, v0: f64) -> Self {
        let site_values = (0..1usize << num_qubits)
            .map(|j| if j & 1 == 0 { v0 } else { -v0 })
            .collect();
        Self {
            preset: PotentialPreset::SigmaZBarrier,
            v0,
            site_values,
        }
    }

    pub fn explicit(site_values: Vec<f64>) -> Self {
        let v0 = site_values.iter().copied().fold(0.0, f64::max);
        Self {
            preset: PotentialPreset::ExplicitSites,
            v0,
            site_values,
        }
    }

    /// Zero everywhere except `v0` on `barrier_site`.
    pub fn single_barrier(num_qubits: usize, barrier_site: usize, v0: f64) -> Result<Self> {
        let dim = 1usize << num_qubits;
        if barrier_site >= dim {
            return Err(Error::SiteOutOfRange {
                site: barrier_site,
                sites: dim,
            });
        }
        let mut v = vec![0.0; dim];
        v[barrier_site] = v0;
        Ok(Self::explicit(v))
    }

    pub fn constant(num_qubits: usize, value: f64) -> Self {
        Self::explicit(vec![value; 1 << num_qubits])
    }

    /// Same profile with `offset` added on every site.
    pub fn shifted(&self, offset: f64) -> Self {
        Self {
            preset: self.preset,
            v0: self.v0,
            site_values: self.site_values.iter().map(|v| v + offset).collect(),
        }
    }

    pub fn num_sites(&self) -> usize {
        self.site_values.len()
    }

    pub fn mean(&self) -> f64 {
        self.site_values.iter().sum::<f64>() / self.site_values.len() as f64
    }
}

/// `θ_x = -(V(x) ± mc²)·dt` for the chosen component.
pub fn potential_phase(
    profile: &PotentialProfile,
    units: &UnitSystem,
    dt: f64,
    component: Component,
) -> Result<DiagonalSpec> {
    let n = profile.num_sites();
    if n < 2 || !n.is_power_of_two() {
        return Err(Error::Config(format!(
            "potential has {n} sites, expected a power of two"
        )));
    }
    let shift = units.potential_shift(component);
    let phases = profile
        .site_values
        .iter()
        .map(|v| -(v + shift) * dt)
        .collect();
    DiagonalSpec::new(n.trailing_zeros() as usize, phases)
}
