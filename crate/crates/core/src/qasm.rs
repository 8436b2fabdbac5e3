//! OpenQASM 2.0 export.
//!
//! Output is byte-stable: gate lines follow circuit order and angles use the
//! shortest decimal form that round-trips to the same `f64` (at most 17
//! significant digits). Global phases are summed into one comment line.
//! Multi-controlled phases have no `qelib1.inc` counterpart and are lowered
//! to parity phases built from `cx` ladders and `u1`.

use std::fmt::Write;

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};

pub fn to_openqasm(circuit: &Circuit) -> Result<String> {
    let n = circuit.num_qubits();
    let mut body = String::new();
    let mut global = 0.0;
    for gate in circuit.gates() {
        match gate {
            Gate::Hadamard { target } => writeln!(body, "h q[{target}];"),
            Gate::Phase { target, angle } => {
                writeln!(body, "u1({}) q[{target}];", fmt_angle(*angle))
            }
            Gate::ControlledPhase {
                control,
                target,
                angle,
            } => writeln!(body, "cu1({}) q[{control}],q[{target}];", fmt_angle(*angle)),
            Gate::Swap { a, b } => writeln!(body, "swap q[{a}],q[{b}];"),
            Gate::MultiControlledPhase { qubits, angle } => {
                lower_multi_controlled_phase(&mut body, qubits, *angle);
                Ok(())
            }
            Gate::GlobalPhase(angle) => {
                global += angle;
                Ok(())
            }
            Gate::SiteDiagonalPhase(_) => return Err(Error::UnsynthesizedDiagonal),
        }
        .expect("writing to a String");
    }

    let mut out = String::with_capacity(body.len() + 128 + 24 * n);
    out.push_str("OPENQASM 2.0;\n");
    out.push_str("include \"qelib1.inc\";\n");
    if !circuit.label().is_empty() {
        let _ = writeln!(out, "// circuit: {}", circuit.label().replace('\n', " "));
    }
    let _ = writeln!(out, "// global phase: {}", fmt_angle(global));
    let _ = writeln!(out, "qreg q[{n}];");
    let _ = writeln!(out, "creg c[{n}];");
    out.push_str(&body);
    for q in 0..n {
        let _ = writeln!(out, "measure q[{q}] -> c[{q}];");
    }
    Ok(out)
}

/// Shortest round-trip decimal, with `-0` normalized to `0`.
pub fn fmt_angle(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x}")
    }
}

/// `θ·[all qubits = 1]` expanded as
/// `Σ_{T ≠ ∅} (-1)^{|T|+1} θ/2^{k-1} · parity_T`.
fn lower_multi_controlled_phase(out: &mut String, qubits: &[usize], angle: f64) {
    let k = qubits.len();
    let scale = angle / (1u64 << (k - 1)) as f64;
    for subset in 1usize..(1 << k) {
        let members: Vec<usize> = (0..k)
            .filter(|i| subset & (1 << i) != 0)
            .map(|i| qubits[i])
            .collect();
        let sign = if members.len() % 2 == 1 { 1.0 } else { -1.0 };
        let (&last, rest) = members.split_last().expect("non-empty subset");
        for q in rest {
            let _ = writeln!(out, "cx q[{q}],q[{last}];");
        }
        let _ = writeln!(out, "u1({}) q[{last}];", fmt_angle(sign * scale));
        for q in rest.iter().rev() {
            let _ = writeln!(out, "cx q[{q}],q[{last}];");
        }
    }
}
