//! The reproduction grid: a case config re-run under every combination of
//! the knobs that are free choices rather than fixed by the setup.

use serde::{Deserialize, Serialize};

use super::config::{ExperimentConfig, InitialState, PotentialConfig};
use super::sweep::{argmax_site, run_time_sweep, transmission_fraction, ProbabilityTrace};
use crate::error::Result;
use crate::kg::{PotentialPreset, Splitting};

/// A transmission increase smaller than this is treated as round-off.
pub const TRANSMISSION_MARGIN: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridKnobs {
    pub kinetic_applications: u8,
    pub preset: PotentialPreset,
    pub splitting: Splitting,
}

/// Tunneling summary of one trace.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TunnelingChecks {
    pub start_site: Option<usize>,
    pub barrier_site: usize,
    pub first_argmax: usize,
    pub final_argmax: usize,
    pub first_transmission: f64,
    pub final_transmission: f64,
}

impl TunnelingChecks {
    pub fn from_trace(trace: &ProbabilityTrace) -> Result<Self> {
        let config = &trace.metadata.config;
        let barrier_site = config.barrier_site;
        Ok(Self {
            start_site: match config.initial_state {
                InitialState::Site(j) => Some(j),
                InitialState::Amplitudes(_) => None,
            },
            barrier_site,
            first_argmax: argmax_site(trace.first_row()),
            final_argmax: argmax_site(trace.last_row()),
            first_transmission: transmission_fraction(trace.first_row(), barrier_site)?,
            final_transmission: transmission_fraction(trace.last_row(), barrier_site)?,
        })
    }

    /// The most probable site at the first time is the starting site.
    pub fn starts_at_initial_site(&self) -> bool {
        self.start_site == Some(self.first_argmax)
    }

    /// Transmission at the last time exceeds the first by more than
    /// [`TRANSMISSION_MARGIN`].
    pub fn transmission_grows(&self) -> bool {
        self.final_transmission > self.first_transmission + TRANSMISSION_MARGIN
    }

    /// The most probable site at the last time lies beyond the barrier.
    pub fn ends_beyond_barrier(&self) -> bool {
        self.final_argmax > self.barrier_site
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridOutcome {
    pub knobs: GridKnobs,
    pub config: ExperimentConfig,
    pub checks: TunnelingChecks,
}

/// All eight knob combinations, in a fixed order.
pub fn knob_grid() -> Vec<GridKnobs> {
    let mut out = Vec::new();
    for kinetic_applications in [1, 2] {
        for preset in [
            PotentialPreset::ExplicitSites,
            PotentialPreset::SigmaZBarrier,
        ] {
            for splitting in [Splitting::PaperOrder, Splitting::Strang] {
                out.push(GridKnobs {
                    kinetic_applications,
                    preset,
                    splitting,
                });
            }
        }
    }
    out
}

/// `base` with the grid knobs applied. Switching to the σ_z preset keeps the
/// barrier height: `v0` is the largest explicit site value.
pub fn apply_knobs(base: &ExperimentConfig, knobs: GridKnobs) -> ExperimentConfig {
    let mut c = base.clone();
    c.kinetic_applications = knobs.kinetic_applications;
    c.splitting = knobs.splitting;
    c.potential = match (&base.potential, knobs.preset) {
        (PotentialConfig::ExplicitSites { site_values }, PotentialPreset::SigmaZBarrier) => {
            PotentialConfig::SigmaZBarrier {
                v0: site_values.iter().copied().fold(0.0, f64::max),
            }
        }
        (PotentialConfig::SigmaZBarrier { v0 }, PotentialPreset::ExplicitSites) => {
            let mut v = vec![0.0; base.num_sites()];
            v[base.barrier_site] = *v0;
            PotentialConfig::ExplicitSites { site_values: v }
        }
        (p, _) => p.clone(),
    };
    c.label = format!(
        "{} [kinetic x{}, {:?}, {:?}]",
        base.label, knobs.kinetic_applications, knobs.preset, knobs.splitting
    );
    c
}

pub fn run_grid(base: &ExperimentConfig) -> Result<Vec<GridOutcome>> {
    knob_grid()
        .into_iter()
        .map(|knobs| {
            let config = apply_knobs(base, knobs);
            let trace = run_time_sweep(&config)?;
            Ok(GridOutcome {
                knobs,
                checks: TunnelingChecks::from_trace(&trace)?,
                config,
            })
        })
        .collect()
}
