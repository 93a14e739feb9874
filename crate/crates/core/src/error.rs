use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Register size outside what the simulator will allocate.
    #[error("register of {n_qubits} qubits is outside the supported range {min}..={max}")]
    Sizing {
        n_qubits: usize,
        min: usize,
        max: usize,
    },

    #[error("qubit index {qubit} out of range for a {n_qubits}-qubit register")]
    QubitIndex { qubit: usize, n_qubits: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    BasisIndex { index: usize, dim: usize },

    #[error("qubit {qubit} is used as both control and target")]
    ControlTargetOverlap { qubit: usize },

    #[error("state norm drifted: |psi|^2 = {norm_sqr} (tolerance {tolerance:e})")]
    NormDrift { norm_sqr: f64, tolerance: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Sizing { .. } => 3,
            Error::NormDrift { .. } => 1,
            _ => 2,
        }
    }
}
