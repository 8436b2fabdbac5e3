//! CSV trace files: one `# {json metadata}` comment line, a `t,p0,p1,...`
//! header, then one row per time. Numbers use the shortest decimal form that
//! parses back to the same `f64`.

use std::io::{BufRead, BufReader, Read, Write};

use super::sweep::{ProbabilityTrace, TraceMetadata, TRACE_SCHEMA_VERSION};
use crate::error::{Error, Result};

pub fn trace_to_string(trace: &ProbabilityTrace) -> Result<String> {
    let mut out = Vec::new();
    persist_trace(trace, &mut out)?;
    Ok(String::from_utf8(out).expect("trace text is utf-8"))
}

pub fn persist_trace<W: Write>(trace: &ProbabilityTrace, mut out: W) -> Result<()> {
    trace.validate()?;
    writeln!(out, "# {}", serde_json::to_string(&trace.metadata)?)?;
    let width = trace.rows[0].len();
    let header: Vec<String> = std::iter::once("t".to_string())
        .chain((0..width).map(|j| format!("p{j}")))
        .collect();
    writeln!(out, "{}", header.join(","))?;
    for (t, row) in trace.times.iter().zip(&trace.rows) {
        let mut line = fmt_num(*t);
        for p in row {
            line.push(',');
            line.push_str(&fmt_num(*p));
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x}")
    }
}

pub fn trace_from_str(text: &str) -> Result<ProbabilityTrace> {
    load_trace(text.as_bytes())
}

pub fn load_trace<R: Read>(source: R) -> Result<ProbabilityTrace> {
    let mut lines = BufReader::new(source).lines();
    let meta_line = lines
        .next()
        .transpose()?
        .ok_or_else(|| Error::MalformedTrace("empty file".into()))?;
    let json = meta_line
        .strip_prefix("# ")
        .ok_or_else(|| Error::MalformedTrace("missing metadata header".into()))?;
    let raw: serde_json::Value =
        serde_json::from_str(json).map_err(|e| Error::MalformedTrace(format!("metadata: {e}")))?;
    let found = raw
        .get("schema_version")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| Error::MalformedTrace("metadata lacks schema_version".into()))?;
    if found != u64::from(TRACE_SCHEMA_VERSION) {
        return Err(Error::SchemaVersion {
            found: found as u32,
            expected: TRACE_SCHEMA_VERSION,
        });
    }
    let metadata: TraceMetadata =
        serde_json::from_value(raw).map_err(|e| Error::MalformedTrace(format!("metadata: {e}")))?;

    let header = lines
        .next()
        .transpose()?
        .ok_or_else(|| Error::MalformedTrace("missing column header".into()))?;
    let width = metadata.config.num_sites();
    let expected: Vec<String> = std::iter::once("t".to_string())
        .chain((0..width).map(|j| format!("p{j}")))
        .collect();
    if header != expected.join(",") {
        return Err(Error::MalformedTrace(format!(
            "unexpected header `{header}`"
        )));
    }

    let mut times = Vec::new();
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let values: Vec<f64> = line
            .split(',')
            .map(|f| f.parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::MalformedTrace(format!("row {}: {e}", i + 1)))?;
        if values.len() != width + 1 {
            return Err(Error::MalformedTrace(format!(
                "row {} has {} fields, expected {}",
                i + 1,
                values.len(),
                width + 1
            )));
        }
        times.push(values[0]);
        rows.push(values[1..].to_vec());
    }
    let trace = ProbabilityTrace {
        metadata,
        times,
        rows,
    };
    trace.validate()?;
    Ok(trace)
}
