use thiserror::Error;

/// Failures reported by the compiler pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian within tolerance")]
    NonHermitianInput,
    #[error("matrix is not unitary within tolerance")]
    NonUnitaryInput,
    #[error("qubit index {index} out of range for {qubits} qubit(s)")]
    IndexOutOfRange { index: usize, qubits: usize },
    #[error("state is not normalized (squared norm {norm_sq})")]
    NotNormalized { norm_sq: f64 },
    #[error("state is entangled (concurrence {concurrence})")]
    EntangledInput { concurrence: f64 },
    #[error("state is separable across the requested cut")]
    SeparableInput,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("classification payload does not reconstruct the state (error {0})")]
    InconsistentClassification(f64),
    #[error("malformed circuit: {0}")]
    MalformedCircuit(String),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("unknown name `{name}`{}", suggest(.suggestions))]
    UnknownName {
        name: String,
        suggestions: Vec<String>,
    },
    #[error("amplitudes do not lie on the support of class {0}")]
    UnsupportedClassRequest(String),
}

fn suggest(s: &[String]) -> String {
    if s.is_empty() {
        String::new()
    } else {
        format!("; did you mean: {}", s.join(", "))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
