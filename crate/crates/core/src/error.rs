use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid dimensions: {0}")]
    InvalidDims(String),

    #[error("index {value} out of range for party {party} of dimension {dim}")]
    IndexOutOfRange {
        party: usize,
        value: usize,
        dim: usize,
    },

    #[error("multi-index has {got} components, expected {expected}")]
    IndexArity { expected: usize, got: usize },

    #[error("all amplitudes cancel: the zero vector is not a state")]
    ZeroState,

    #[error("ket {ket:?} mixes incompatible amplitudes ({detail})")]
    IncompatibleMerge { ket: Vec<usize>, detail: String },

    #[error("invalid parameter name `{0}`")]
    InvalidParameter(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("level {ell} out of range 1..={max}")]
    LevelOutOfRange { ell: usize, max: usize },

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("matrix has parametric entries; use the generic rank policy")]
    ParametricUnderExact,

    #[error("invalid prime {p}: {reason}")]
    InvalidPrime { p: u64, reason: String },

    #[error("prime {p} divides a denominator")]
    PrimeDividesDenominator { p: u64 },

    #[error("matrix {rows}x{cols} exceeds the {max}x{max} limit")]
    MatrixTooLarge {
        rows: usize,
        cols: usize,
        max: usize,
    },

    #[error("invalid rank policy: {0}")]
    InvalidPolicy(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
