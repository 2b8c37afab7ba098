use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);

/// Failures when registering cuspidal symbols.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("symbol `{0}` is already registered")]
    DuplicateName(String),
    #[error("symbol `{name}` names dual `{dual}`, which is not registered")]
    DanglingDual { name: String, dual: String },
    #[error("symbol `{name}` is symplectic but has odd dimension {dim}")]
    TypeDimMismatch { name: String, dim: u32 },
    #[error("symbol `{name}`: {reason}")]
    DualMismatch { name: String, reason: String },
    #[error("symbol `{0}` must have positive dimension")]
    ZeroDimension(String),
}

/// Failures when constructing parameter blocks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("exponent x = {0} lies outside the open interval ]-1/2, 1/2[")]
    XOutOfRange(Rational),
    #[error("block lengths must be positive")]
    ZeroLength,
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
}

/// Failures of the reducibility bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReducibilityError {
    #[error("n1 is undefined at s0 = {s0} for x = {x}")]
    DomainError { s0: Rational, x: Rational },
    #[error("inadmissible parameter: signed count {count} at s0 = {s0} for `{rho}`")]
    InadmissibleParam { rho: String, s0: Rational, count: i64 },
}

/// Failures of the reducibility-set reconstruction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructionError {
    #[error("invalid reducibility set: {0}")]
    InvalidRedSet(String),
    #[error("inadmissible parameter: multiplicity {multiplicity} at {point} for `{rho}`")]
    InadmissibleParam {
        rho: String,
        point: Rational,
        multiplicity: i64,
    },
    #[error("inconsistent reducibility set at y = {y}: remainder {remainder}")]
    Inconsistent { y: Rational, remainder: i64 },
}

/// Failures while building the formal parameter.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LParamError {
    #[error("pairing type requested for a symbol that is not self-dual")]
    NotSelfDualInput,
    #[error("closure violation: {0}")]
    ClosureViolation(String),
    #[error("dimension mismatch: blocks sum to {actual}, the dual group needs {expected}")]
    DimensionMismatch { expected: u64, actual: u64 },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
}

/// A text-format error pinned to a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{source_name}:{line}:{column}: {message}")]
pub struct ParseError {
    pub source_name: String,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Top-level error for sessions and command dispatch.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error("validation failed:\n{0}")]
    Validation(String),
    #[error(transparent)]
    Reducibility(#[from] ReducibilityError),
    #[error(transparent)]
    Reconstruction(#[from] ReconstructionError),
    #[error(transparent)]
    LParam(#[from] LParamError),
    #[error("unknown command `{0}`")]
    UnknownCommand(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Exit-code contract: 1 for malformed or invalid input, 2 for inputs that are
    /// well formed but mathematically impossible.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Reducibility(ReducibilityError::InadmissibleParam { .. })
            | Error::Reconstruction(ReconstructionError::InadmissibleParam { .. })
            | Error::Reconstruction(ReconstructionError::Inconsistent { .. }) => 2,
            _ => 1,
        }
    }
}
