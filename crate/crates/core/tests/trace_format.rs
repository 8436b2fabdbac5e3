mod common;

use std::collections::BTreeMap;

use common::{check_golden, load_config};
use kgsim_core::experiment::{
    load_trace, persist_trace, run_time_sweep, trace_from_str, trace_to_string, ExperimentConfig,
    InitialState, PotentialConfig, ProbabilityTrace, SweepMode, TraceMetadata,
};
use kgsim_core::kg::{Component, Splitting, UnitSystem};
use kgsim_core::Error;

fn hand_built() -> ProbabilityTrace {
    let config = ExperimentConfig {
        schema_version: 1,
        label: "hand-built".into(),
        num_qubits: 1,
        units: UnitSystem::default(),
        potential: PotentialConfig::SigmaZBarrier { v0: 11.0 },
        potential_offset: 0.0,
        component: Component::Particle,
        times: vec![0.0, 0.5],
        trotter_steps: 3,
        splitting: Splitting::Strang,
        kinetic_applications: 1,
        convention: Default::default(),
        initial_state: InitialState::Site(0),
        barrier_site: 0,
        mode: SweepMode::Independent,
        seed: 42,
        notes: BTreeMap::new(),
    };
    ProbabilityTrace {
        metadata: TraceMetadata {
            schema_version: 1,
            config,
        },
        times: vec![0.0, 0.5],
        rows: vec![vec![1.0, 0.0], vec![0.1, 0.9]],
    }
}

#[test]
fn hand_built_trace_golden() {
    let text = trace_to_string(&hand_built()).unwrap();
    assert!(
        check_golden("hand_built_trace.csv", &text),
        "drifted:\n{text}"
    );
    assert_eq!(trace_from_str(&text).unwrap(), hand_built());
}

#[test]
fn sweep_persistence_is_deterministic() {
    let config = load_config("case_a.json");
    let a = trace_to_string(&run_time_sweep(&config).unwrap()).unwrap();
    let b = trace_to_string(&run_time_sweep(&config).unwrap()).unwrap();
    assert_eq!(a, b);
    let back = trace_from_str(&a).unwrap();
    assert_eq!(trace_to_string(&back).unwrap(), a);
}

#[test]
fn file_round_trip() {
    let dir = std::env::temp_dir().join(format!("kgsim-trace-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("trace.csv");
    let trace = run_time_sweep(&load_config("case_b.json")).unwrap();
    persist_trace(&trace, std::fs::File::create(&path).unwrap()).unwrap();
    let back = load_trace(std::fs::File::open(&path).unwrap()).unwrap();
    assert_eq!(back, trace);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn malformed_inputs() {
    let good = trace_to_string(&hand_built()).unwrap();
    let without_meta: String = good.lines().skip(1).map(|l| format!("{l}\n")).collect();
    assert!(matches!(
        trace_from_str(&without_meta),
        Err(Error::MalformedTrace(_))
    ));

    let bad_header = good.replace("t,p0,p1", "t,p0,p2");
    assert!(matches!(
        trace_from_str(&bad_header),
        Err(Error::MalformedTrace(_))
    ));

    let unnormalized = good.replace("0.5,0.1,0.9", "0.5,0.1,0.8");
    assert!(matches!(
        trace_from_str(&unnormalized),
        Err(Error::UnnormalizedRow { .. })
    ));

    let short_row = good.replace("0.5,0.1,0.9", "0.5,1");
    assert!(matches!(
        trace_from_str(&short_row),
        Err(Error::MalformedTrace(_))
    ));

    let unordered = good.replace("0.5,0.1,0.9", "-1,0.1,0.9");
    assert!(matches!(
        trace_from_str(&unordered),
        Err(Error::InvalidTimes)
    ));

    let v2 = good.replace(
        "\"schema_version\":1,\"config\"",
        "\"schema_version\":2,\"config\"",
    );
    assert!(matches!(
        trace_from_str(&v2),
        Err(Error::SchemaVersion { found: 2, .. })
    ));
}
