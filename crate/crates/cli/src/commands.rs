use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use kgsim_core::experiment::{
    evolution_qasm, oracle_convergence, run_time_sweep, trace_to_string, ExperimentConfig,
};
use kgsim_core::heatmap::render_heatmap;
use kgsim_core::kg::Component;
use kgsim_core::qasm::to_openqasm;
use kgsim_core::{qft_circuit, Error};
use serde::Serialize;

pub const TRACE_FILE: &str = "trace.csv";
pub const HEATMAP_FILE: &str = "heatmap.svg";
pub const MANIFEST_FILE: &str = "manifest.json";

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Io(String),
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Io(_) => 3,
            CliError::Numeric(_) => 4,
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Io(format!("{}: {e}", path.display()))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "invalid configuration: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Numeric(m) => write!(f, "numeric failure: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(e) => CliError::Io(e.to_string()),
            Error::NormDrift { .. }
            | Error::NotNormalized { .. }
            | Error::UnnormalizedRow { .. } => CliError::Numeric(e.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

#[derive(Serialize)]
struct RunManifest<'a> {
    tool_version: &'static str,
    command: Vec<String>,
    config: &'a ExperimentConfig,
    out_dir: String,
    outputs: Vec<String>,
    duration_seconds: f64,
}

fn load_config(path: &Path) -> Result<ExperimentConfig, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let config = ExperimentConfig::from_json(&text)?;
    config.validate()?;
    Ok(config)
}

/// Writes `files` into `dir` in order; on failure removes whatever this call
/// already wrote so no partial run is left behind.
fn write_all(dir: &Path, files: &[(&str, &str)]) -> Result<(), CliError> {
    let mut written: Vec<PathBuf> = Vec::new();
    for (name, contents) in files {
        let path = dir.join(name);
        if let Err(e) = fs::write(&path, contents) {
            for p in &written {
                let _ = fs::remove_file(p);
            }
            return Err(CliError::io(&path, e));
        }
        written.push(path);
    }
    Ok(())
}

pub fn sweep(config_path: &Path, out: &Path) -> Result<(), CliError> {
    let started = Instant::now();
    let config = load_config(config_path)?;
    let trace = run_time_sweep(&config)?;
    let csv = trace_to_string(&trace)?;
    let svg = render_heatmap(&trace);

    fs::create_dir_all(out).map_err(|e| CliError::io(out, e))?;
    write_all(out, &[(TRACE_FILE, &csv), (HEATMAP_FILE, &svg)])?;

    let manifest = RunManifest {
        tool_version: env!("CARGO_PKG_VERSION"),
        command: std::env::args().collect(),
        config: &config,
        out_dir: out.display().to_string(),
        outputs: [TRACE_FILE, HEATMAP_FILE, MANIFEST_FILE]
            .iter()
            .map(|name| out.join(name).display().to_string())
            .collect(),
        duration_seconds: started.elapsed().as_secs_f64(),
    };
    let json =
        serde_json::to_string_pretty(&manifest).map_err(|e| CliError::Io(e.to_string()))? + "\n";
    if let Err(e) = write_all(out, &[(MANIFEST_FILE, &json)]) {
        for name in [TRACE_FILE, HEATMAP_FILE] {
            let _ = fs::remove_file(out.join(name));
        }
        return Err(e);
    }
    println!("wrote {} rows to {}", trace.rows.len(), out.display());
    Ok(())
}

pub fn qasm(
    config_path: &Path,
    component: Option<Component>,
    t: Option<f64>,
    r: usize,
    qft_only: bool,
) -> Result<(), CliError> {
    let config = load_config(config_path)?;
    let text = if qft_only {
        to_openqasm(&qft_circuit(config.num_qubits)?)?
    } else {
        let t = t.ok_or_else(|| CliError::Config("--t is required".into()))?;
        evolution_qasm(&config, component.unwrap_or(config.component), t, r)?
    };
    print!("{text}");
    Ok(())
}

pub fn oracle_compare(config_path: &Path, steps: &[usize], t: Option<f64>) -> Result<(), CliError> {
    let config = load_config(config_path)?;
    let t = match t {
        Some(t) => t,
        None => *config
            .times
            .last()
            .ok_or_else(|| CliError::Config("config has no times".into()))?,
    };
    let rows = oracle_convergence(&config, t, steps)?;
    println!("r,error");
    for row in rows {
        println!("{},{}", row.trotter_steps, row.error);
    }
    Ok(())
}
