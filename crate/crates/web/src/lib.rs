//! Browser bindings: each export takes an experiment config as JSON and
//! returns text (SVG, OpenQASM or CSV) for the page to display.

use kgsim_core::experiment::{
    evolution_qasm, oracle_convergence, run_time_sweep, ExperimentConfig,
};
use kgsim_core::heatmap::render_heatmap;
use wasm_bindgen::prelude::*;

const CASE_A: &str = include_str!("../../../configs/case_a.json");
const CASE_B: &str = include_str!("../../../configs/case_b.json");

/// Registers above this size are refused so the page stays responsive.
pub const MAX_DEMO_QUBITS: usize = 5;

fn parse(config_json: &str) -> Result<ExperimentConfig, String> {
    let config = ExperimentConfig::from_json(config_json).map_err(|e| e.to_string())?;
    config.validate().map_err(|e| e.to_string())?;
    if config.num_qubits > MAX_DEMO_QUBITS {
        return Err(format!("the demo is limited to {MAX_DEMO_QUBITS} qubits"));
    }
    Ok(config)
}

pub fn bundled(name: &str) -> Result<&'static str, String> {
    match name {
        "case_a" => Ok(CASE_A),
        "case_b" => Ok(CASE_B),
        other => Err(format!("unknown bundled config {other:?}")),
    }
}

pub fn sweep(config_json: &str) -> Result<String, String> {
    let trace = run_time_sweep(&parse(config_json)?).map_err(|e| e.to_string())?;
    Ok(render_heatmap(&trace))
}

pub fn qasm(config_json: &str, t: f64, trotter_steps: usize) -> Result<String, String> {
    let config = parse(config_json)?;
    evolution_qasm(&config, config.component, t, trotter_steps).map_err(|e| e.to_string())
}

pub fn oracle_report(config_json: &str, t: f64, steps: &[usize]) -> Result<String, String> {
    let rows = oracle_convergence(&parse(config_json)?, t, steps).map_err(|e| e.to_string())?;
    let mut out = String::from("r,error\n");
    for row in rows {
        out.push_str(&format!("{},{}\n", row.trotter_steps, row.error));
    }
    Ok(out)
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

/// JSON text of a bundled config (`"case_a"` or `"case_b"`).
#[wasm_bindgen(js_name = bundledConfig)]
pub fn bundled_config(name: &str) -> Result<String, JsError> {
    js(bundled(name).map(str::to_string))
}

/// Runs the time sweep and returns the heatmap SVG.
#[wasm_bindgen(js_name = sweepSvg)]
pub fn sweep_svg(config_json: &str) -> Result<String, JsError> {
    js(sweep(config_json))
}

/// OpenQASM 2.0 for the configured component evolved to `t` in `r` steps.
#[wasm_bindgen(js_name = exportQasm)]
pub fn export_qasm(config_json: &str, t: f64, r: usize) -> Result<String, JsError> {
    js(qasm(config_json, t, r))
}

/// `r,error` CSV of Trotter error against the exact propagator.
#[wasm_bindgen(js_name = oracleCompare)]
pub fn oracle_compare(config_json: &str, t: f64, steps: Vec<usize>) -> Result<String, JsError> {
    js(oracle_report(config_json, t, &steps))
}
