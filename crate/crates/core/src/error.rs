use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit index {index} out of range for a {num_qubits}-qubit register")]
    QubitOutOfRange { index: usize, num_qubits: usize },

    #[error("gate acts twice on qubit {0}")]
    RepeatedQubit(usize),

    #[error("diagonal has {got} phases, expected {expected}")]
    DiagonalLength { expected: usize, got: usize },

    #[error("circuit acts on {circuit} qubits but the state has {state}")]
    QubitCountMismatch { state: usize, circuit: usize },

    #[error("site {site} out of range for {sites} lattice sites")]
    SiteOutOfRange { site: usize, sites: usize },

    #[error("qubit count {n} outside the supported range {min}..={max}")]
    QubitCountOutOfRange { n: usize, min: usize, max: usize },

    #[error("amplitude vector is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("shots must be at least 1")]
    ZeroShots,

    #[error("trotter_steps must be at least 1")]
    ZeroTrotterSteps,

    #[error("kinetic_applications must be 1 or 2, got {0}")]
    KineticApplications(u8),

    #[error("circuit still contains a site-diagonal phase; synthesize it before export")]
    UnsynthesizedDiagonal,

    #[error("probability row sums to {sum}, not 1")]
    UnnormalizedRow { sum: f64 },

    #[error("time grid must be non-empty and strictly increasing")]
    InvalidTimes,

    #[error("norm drifted by {drift:e} during evolution")]
    NormDrift { drift: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("malformed trace: {0}")]
    MalformedTrace(String),

    #[error("trace schema version {found} is not supported (expected {expected})")]
    SchemaVersion { found: u32, expected: u32 },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
