use thiserror::Error;

/// Reasons a `(N, k, a)` triple is rejected.
///
/// Checks run in the order qubit count, multiplicity, overlap, so every
/// rejected input maps to exactly one kind.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum ConfigError {
    #[error("qubit count N = {n} is outside the supported range {min}..={max}")]
    QubitCount { n: u32, min: u32, max: u32 },
    #[error("multiplicity k = {k} is outside the supported range {min}..={max} for N = {n}")]
    Multiplicity { n: u32, k: u32, min: u32, max: u32 },
    #[error("spinor parameter a = {a} is outside [0, 1)")]
    Overlap { a: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SqueezeError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("mean spin is a null vector; the squeezing parameter is undefined")]
    UndefinedMeanSpin,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("N = {n} exceeds the full Hilbert space limit of {max} qubits")]
    FullHilbertTooLarge { n: u32, max: u32 },
    #[error("scan resolution {steps} is below the minimum of {min}")]
    ScanResolution { steps: usize, min: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("binomial row n = {n} exceeds the supported maximum {max}")]
pub struct BinomialRangeError {
    pub n: u64,
    pub max: u64,
}
