use serde::{Deserialize, Serialize};

use super::config::ExperimentConfig;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub trotter_steps: usize,
    /// `‖ψ_trotter − ψ_exact‖₂` at the requested time.
    pub error: f64,
}

/// Trotter error against the exact component propagator at time `t`, for
/// each step count in `steps`. Splitting, lattice and initial state come from
/// `config`; its own `trotter_steps` is ignored.
pub fn oracle_convergence(
    config: &ExperimentConfig,
    t: f64,
    steps: &[usize],
) -> Result<Vec<ConvergenceRow>> {
    let exp = config.resolve()?;
    let oracle = exp.system.component_oracle(exp.component)?;
    let exact = oracle.evolve(&exp.initial, t)?;
    steps
        .iter()
        .map(|&r| {
            let mut params = exp.params(t);
            params.trotter_steps = r;
            let psi = exp.system.evolve(&exp.initial, exp.component, &params)?;
            Ok(ConvergenceRow {
                trotter_steps: r,
                error: psi.distance(&exact),
            })
        })
        .collect()
}

/// `error[i] / error[i+1]` for successive rows.
pub fn error_ratios(rows: &[ConvergenceRow]) -> Vec<f64> {
    rows.windows(2).map(|w| w[0].error / w[1].error).collect()
}
