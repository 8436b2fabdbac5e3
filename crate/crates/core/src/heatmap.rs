//! Static SVG heatmap of a probability trace: lattice sites on the vertical
//! axis (site 0 at the bottom), time on the horizontal axis, fill intensity
//! linear in probability, with the value printed in every cell.

use std::fmt::Write;

use crate::experiment::ProbabilityTrace;

const CELL_W: usize = 58;
const CELL_H: usize = 36;
const LEFT: usize = 84;
const TOP: usize = 44;
const BOTTOM: usize = 56;
const RIGHT: usize = 24;

/// `|01⟩`-style label for site `j` on `n` qubits (qubit 0 rightmost).
pub fn ket_label(site: usize, num_qubits: usize) -> String {
    format!("|{site:0num_qubits$b}\u{27e9}")
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// White to dark blue.
fn fill(p: f64) -> String {
    let p = p.clamp(0.0, 1.0);
    let mix = |lo: f64, hi: f64| (lo + (hi - lo) * p).round() as u8;
    format!(
        "#{:02x}{:02x}{:02x}",
        mix(255.0, 8.0),
        mix(255.0, 48.0),
        mix(255.0, 107.0)
    )
}

pub fn render_heatmap(trace: &ProbabilityTrace) -> String {
    let config = &trace.metadata.config;
    let n = config.num_qubits;
    let sites = trace.rows.first().map_or(0, Vec::len);
    let cols = trace.times.len();
    let width = LEFT + cols * CELL_W + RIGHT;
    let height = TOP + sites * CELL_H + BOTTOM;
    let title = if config.label.is_empty() {
        format!("{:?} site probabilities", config.component)
    } else {
        config.label.clone()
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="monospace" font-size="12">"#
    );
    let _ = writeln!(
        s,
        r#"<rect width="{width}" height="{height}" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="24" text-anchor="middle" font-size="14">{}</text>"#,
        width / 2,
        escape(&title)
    );

    for (col, (t, row)) in trace.times.iter().zip(&trace.rows).enumerate() {
        let x = LEFT + col * CELL_W;
        for (site, p) in row.iter().enumerate() {
            let y = TOP + (sites - 1 - site) * CELL_H;
            let _ = writeln!(
                s,
                r##"<rect x="{x}" y="{y}" width="{CELL_W}" height="{CELL_H}" fill="{}" stroke="#bbbbbb" stroke-width="0.5"><title>t={t} {} p={p}</title></rect>"##,
                fill(*p),
                escape(&ket_label(site, n)),
            );
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" text-anchor="middle" fill="{}">{p:.2}</text>"#,
                x + CELL_W / 2,
                y + CELL_H / 2 + 4,
                if *p > 0.5 { "white" } else { "black" },
            );
        }
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="middle">{t}</text>"#,
            x + CELL_W / 2,
            TOP + sites * CELL_H + 18
        );
    }
    for site in 0..sites {
        let y = TOP + (sites - 1 - site) * CELL_H + CELL_H / 2 + 4;
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{y}" text-anchor="end">{}</text>"#,
            LEFT - 8,
            escape(&ket_label(site, n))
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">time</text>"#,
        LEFT + cols * CELL_W / 2,
        height - 12
    );
    s.push_str("</svg>\n");
    s
}
