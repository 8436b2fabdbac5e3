use serde::{Deserialize, Serialize};

use super::config::{ExperimentConfig, SweepMode};
use crate::error::{Error, Result};
use crate::statevector::{StateVector, NORM_TOLERANCE};

pub const TRACE_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceMetadata {
    pub schema_version: u32,
    pub config: ExperimentConfig,
}

/// Site probabilities at each sampled time. `rows[i]` belongs to `times[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbabilityTrace {
    pub metadata: TraceMetadata,
    pub times: Vec<f64>,
    pub rows: Vec<Vec<f64>>,
}

impl ProbabilityTrace {
    /// Checks row alignment, strictly increasing times and normalization.
    pub fn validate(&self) -> Result<()> {
        if self.times.len() != self.rows.len() {
            return Err(Error::MalformedTrace(format!(
                "{} times but {} rows",
                self.times.len(),
                self.rows.len()
            )));
        }
        if self.times.is_empty() || self.times.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidTimes);
        }
        let width = self.metadata.config.num_sites();
        for row in &self.rows {
            if row.len() != width {
                return Err(Error::MalformedTrace(format!(
                    "row has {} entries, expected {width}",
                    row.len()
                )));
            }
            let sum: f64 = row.iter().sum();
            if (sum - 1.0).abs() > NORM_TOLERANCE {
                return Err(Error::UnnormalizedRow { sum });
            }
        }
        Ok(())
    }

    pub fn first_row(&self) -> &[f64] {
        &self.rows[0]
    }

    pub fn last_row(&self) -> &[f64] {
        self.rows.last().expect("trace has rows")
    }
}

/// Runs the sweep described by `config`. In independent mode every row is
/// its own evolution from the initial state, so rows may be computed in
/// parallel; the trace is always assembled in time order.
pub fn run_time_sweep(config: &ExperimentConfig) -> Result<ProbabilityTrace> {
    let exp = config.resolve()?;
    let states: Vec<StateVector> = match exp.mode {
        SweepMode::Independent => {
            let evolve_at = |t: &f64| {
                exp.system
                    .evolve(&exp.initial, exp.component, &exp.params(*t))
            };
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                exp.times.par_iter().map(evolve_at).collect::<Result<_>>()?
            }
            #[cfg(not(feature = "parallel"))]
            {
                exp.times.iter().map(evolve_at).collect::<Result<_>>()?
            }
        }
        SweepMode::Cumulative => {
            let mut out = Vec::with_capacity(exp.times.len());
            let mut state = exp.initial.clone();
            let mut prev = 0.0;
            for &t in &exp.times {
                state = exp
                    .system
                    .evolve(&state, exp.component, &exp.params(t - prev))?;
                prev = t;
                out.push(state.clone());
            }
            out
        }
    };
    let trace = ProbabilityTrace {
        metadata: TraceMetadata {
            schema_version: TRACE_SCHEMA_VERSION,
            config: config.clone(),
        },
        times: exp.times.clone(),
        rows: states.iter().map(StateVector::site_probabilities).collect(),
    };
    trace.validate()?;
    Ok(trace)
}

const ROW_TOLERANCE: f64 = 1e-6;

fn check_row(row: &[f64]) -> Result<()> {
    let sum: f64 = row.iter().sum();
    if (sum - 1.0).abs() > ROW_TOLERANCE {
        return Err(Error::UnnormalizedRow { sum });
    }
    Ok(())
}

/// `Σ_j j·p_j`.
pub fn expected_position(row: &[f64]) -> Result<f64> {
    check_row(row)?;
    Ok(row.iter().enumerate().map(|(j, p)| j as f64 * p).sum())
}

/// Probability strictly beyond `barrier_site`.
pub fn transmission_fraction(row: &[f64], barrier_site: usize) -> Result<f64> {
    if barrier_site >= row.len() {
        return Err(Error::SiteOutOfRange {
            site: barrier_site,
            sites: row.len(),
        });
    }
    Ok(row[barrier_site + 1..].iter().sum())
}

/// Most probable site; the lowest index wins ties.
pub fn argmax_site(row: &[f64]) -> usize {
    row.iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |(bi, bp), (i, &p)| {
            if p > bp {
                (i, p)
            } else {
                (bi, bp)
            }
        })
        .0
}
