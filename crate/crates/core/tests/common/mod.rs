#![allow(dead_code)]

use std::path::PathBuf;

use kgsim_core::experiment::ExperimentConfig;
use num_complex::Complex64;

pub fn repo_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn load_config(name: &str) -> ExperimentConfig {
    let path = repo_root().join("configs").join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path:?}: {e}"));
    ExperimentConfig::from_json(&text).unwrap()
}

/// Compares `actual` with the frozen file; `KGSIM_BLESS=1` rewrites it.
pub fn check_golden(name: &str, actual: &str) -> bool {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("KGSIM_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return true;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path:?}: {e}"));
    expected == actual
}

/// Minimal interpreter for the OpenQASM subset the exporter emits
/// (`h`, `u1`, `cu1`, `cx`, `swap`, `measure`, register declarations), with
/// gate matrices written out independently of the library's gate code.
/// Returns the amplitudes after running the program on `|input⟩` and the
/// global phase read from the comment line.
pub fn run_qasm(text: &str, input: usize) -> (Vec<Complex64>, f64) {
    let mut amps: Vec<Complex64> = Vec::new();
    let mut global = 0.0;
    for line in text.lines() {
        let line = line.trim();
        if let Some(g) = line.strip_prefix("// global phase: ") {
            global = g.parse().unwrap();
            continue;
        }
        if line.is_empty()
            || line.starts_with("//")
            || line.starts_with("OPENQASM")
            || line.starts_with("include")
            || line.starts_with("creg")
            || line.starts_with("measure")
        {
            continue;
        }
        if let Some(rest) = line.strip_prefix("qreg q[") {
            let n: usize = rest.trim_end_matches("];").parse().unwrap();
            amps = vec![Complex64::new(0.0, 0.0); 1 << n];
            amps[input] = Complex64::new(1.0, 0.0);
            continue;
        }
        let line = line.trim_end_matches(';');
        let (op, args) = line.split_once(' ').unwrap();
        let qubits: Vec<usize> = args
            .split(',')
            .map(|a| {
                a.trim()
                    .trim_start_matches("q[")
                    .trim_end_matches(']')
                    .parse()
                    .unwrap()
            })
            .collect();
        let (name, angle) = match op.split_once('(') {
            Some((name, a)) => (name, a.trim_end_matches(')').parse::<f64>().unwrap()),
            None => (op, 0.0),
        };
        let bit = |q: usize| 1usize << q;
        match name {
            "h" => {
                let s = 0.5f64.sqrt();
                let b = bit(qubits[0]);
                let old = amps.clone();
                for (i, a) in amps.iter_mut().enumerate() {
                    *a = if i & b == 0 {
                        (old[i] + old[i | b]) * s
                    } else {
                        (old[i ^ b] - old[i]) * s
                    };
                }
            }
            "u1" => {
                for (i, a) in amps.iter_mut().enumerate() {
                    if i & bit(qubits[0]) != 0 {
                        *a *= Complex64::new(angle.cos(), angle.sin());
                    }
                }
            }
            "cu1" => {
                let m = bit(qubits[0]) | bit(qubits[1]);
                for (i, a) in amps.iter_mut().enumerate() {
                    if i & m == m {
                        *a *= Complex64::new(angle.cos(), angle.sin());
                    }
                }
            }
            "cx" => {
                let old = amps.clone();
                for (i, a) in amps.iter_mut().enumerate() {
                    let src = if i & bit(qubits[0]) != 0 {
                        i ^ bit(qubits[1])
                    } else {
                        i
                    };
                    *a = old[src];
                }
            }
            "swap" => {
                let old = amps.clone();
                for (i, a) in amps.iter_mut().enumerate() {
                    let (ba, bb) = ((i >> qubits[0]) & 1, (i >> qubits[1]) & 1);
                    let j = (i & !(bit(qubits[0]) | bit(qubits[1])))
                        | (bb << qubits[0])
                        | (ba << qubits[1]);
                    *a = old[j];
                }
            }
            other => panic!("unexpected instruction {other}"),
        }
    }
    (amps, global)
}
