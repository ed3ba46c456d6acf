use thiserror::Error;

/// Errors produced while validating inputs or running the estimators.
///
/// Variants are grouped by cause: the `Invalid*`/`Insufficient*`/`Mismatch`
/// variants indicate bad inputs and are recoverable by the caller, while
/// `SolverFailure` and `ExpansionCap` signal that an internal iteration cap
/// was hit, which for well-formed inputs points at a bug rather than a data
/// condition.
#[derive(Debug, Clone, PartialEq, Error)]
#[non_exhaustive]
pub enum Error {
    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("non-finite value in {context}: {value}")]
    NonFinite { context: &'static str, value: f64 },

    #[error("observation dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("kernel `{kernel}` needs {needed} coordinate(s) per observation, data has {found}")]
    KernelDimension {
        kernel: String,
        needed: usize,
        found: usize,
    },

    #[error("kernel `{kernel}` is {arity}, which does not match this call")]
    KernelArityMismatch { kernel: String, arity: &'static str },

    #[error("kernel degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("sample `{label}` has {found} observation(s) but {context} needs at least {needed}")]
    InsufficientSample {
        label: String,
        found: usize,
        needed: usize,
        context: &'static str,
    },

    #[error("kernel `{kernel}` returned non-finite value {value} on subset {subset}")]
    NonFiniteKernel {
        kernel: String,
        value: f64,
        subset: String,
    },

    #[error("invalid parameter {name}={value}: must satisfy {requirement}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },

    #[error("pseudo-value mean {mean} is inconsistent with the point estimate {u_stat}")]
    InconsistentPseudoValues { mean: f64, u_stat: f64 },

    #[error("root solver failed to converge in {iterations} iterations ({context})")]
    SolverFailure {
        context: &'static str,
        iterations: usize,
    },

    #[error("confidence bound search exceeded {cap} expansions on the {side} side")]
    ExpansionCap { side: &'static str, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
