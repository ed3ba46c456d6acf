//! Exit-code discipline: 2 for bad invocations, 3 for bad data, 4 for
//! numerical trouble. Code 2 is also what clap uses for argument parsing,
//! so every "you typed it wrong" path looks the same to callers.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    /// Invalid flag values, unknown kernels/presets: exit 2.
    Usage(String),
    /// File and CSV problems, or data incompatible with the kernel: exit 3.
    Data(String),
    /// The computation itself failed: exit 4.
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Data(_) => 3,
            CliError::Numeric(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Data(msg) | CliError::Numeric(msg) => {
                f.write_str(msg)
            }
        }
    }
}

impl std::error::Error for CliError {}

/// Library errors split by whether they describe the data shape or the
/// numerics; argument-value problems are caught before library calls and
/// never reach this mapping.
pub fn from_lib(err: ajel::Error) -> CliError {
    use ajel::Error::*;
    match err {
        Empty(_)
        | NonFinite { .. }
        | DimensionMismatch { .. }
        | KernelDimension { .. }
        | KernelArityMismatch { .. }
        | InsufficientSample { .. } => CliError::Data(err.to_string()),
        DegreeTooLarge { .. }
        | NonFiniteKernel { .. }
        | InvalidParameter { .. }
        | InconsistentPseudoValues { .. }
        | SolverFailure { .. }
        | ExpansionCap { .. } => CliError::Numeric(err.to_string()),
        // The library error enum is non-exhaustive; treat anything unknown
        // as a computation failure.
        _ => CliError::Numeric(err.to_string()),
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
