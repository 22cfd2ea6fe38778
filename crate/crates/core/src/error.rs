use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: expected `bitstring real [imag]`")]
    MalformedLine { line: usize },
    #[error("line {line}: invalid basis label `{label}`")]
    InvalidLabel { line: usize, label: String },
    #[error("line {line}: duplicate basis label `{label}`")]
    DuplicateLabel { line: usize, label: String },
    #[error("line {line}: label has {found} bits, expected {expected}")]
    InconsistentLength {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: cannot parse number `{token}`")]
    BadNumber { line: usize, token: String },
    #[error("state has no amplitudes")]
    EmptyState,
    #[error("squared norm {norm_sq} deviates from 1 by more than {tol:e}")]
    NotNormalized { norm_sq: f64, tol: f64 },
    #[error("qubit count mismatch: {left} vs {right}")]
    QubitCountMismatch { left: usize, right: usize },
    #[error("expected {expected} qubits, found {found}")]
    WrongQubitCount { expected: usize, found: usize },
    #[error("qubit index {index} out of range for {qubits} qubits")]
    QubitIndexOutOfRange { index: usize, qubits: usize },
    #[error("invalid qubit subset: {0}")]
    InvalidSubset(String),
    #[error("{qubits} qubits exceeds the limit of {max} for this operation")]
    TooManyQubits { qubits: usize, max: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("outside validity domain: {0}")]
    OutsideDomain(String),
    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),
    #[error("Bloch vector is not unit length (norm {0})")]
    NonUnitBloch(f64),
    #[error("Bloch vector has nonzero y component {0}")]
    NonZeroY(f64),
}
