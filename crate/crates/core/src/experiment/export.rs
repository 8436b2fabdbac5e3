use super::config::ExperimentConfig;
use crate::error::Result;
use crate::kg::{Component, DiagonalLowering, EvolutionParams};
use crate::qasm::to_openqasm;

/// OpenQASM for the fully synthesized `r`-step evolution to time `t`, using
/// the lattice of `config` and `component` in place of the configured one.
pub fn evolution_qasm(
    config: &ExperimentConfig,
    component: Component,
    t: f64,
    trotter_steps: usize,
) -> Result<String> {
    let exp = config.resolve()?;
    let params = EvolutionParams::new(t, trotter_steps, exp.splitting);
    let circuit =
        exp.system
            .evolution_circuit(component, &params, DiagonalLowering::Synthesized)?;
    to_openqasm(&circuit)
}
