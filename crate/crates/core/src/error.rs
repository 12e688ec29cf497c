//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by graph construction, serialization and the bound/solver
/// layers.
#[derive(Debug, Error)]
pub enum Error {
    /// graph6 input could not be parsed; `offset` is the byte position.
    #[error("malformed graph6 input at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// graph6 output only supports the short form (n <= 62).
    #[error("graph6 short form supports at most 62 vertices, got {0}")]
    Graph6TooLarge(usize),

    /// Requested name is not in the catalog.
    #[error("unknown graph name '{name}'; available: {available}")]
    UnknownGraph { name: String, available: String },

    /// An operation requires a connected graph.
    #[error("{0} requires a connected graph")]
    Disconnected(&'static str),

    /// Built-in enumeration is capped at n = 7.
    #[error("enumeration supports n <= 7 (got {0}); supply a graph6 file for larger n")]
    EnumerationUnsupported(usize),

    /// The eigensolver failed to converge within its sweep cap.
    #[error("eigensolver did not converge: off-diagonal residual {residual:.3e} after {sweeps} sweeps")]
    EigenNonConvergence { residual: f64, sweeps: usize },

    /// A bound was evaluated outside its hypothesis.
    #[error("bound hypothesis violated: {0}")]
    Hypothesis(String),

    /// A bound ran into a degenerate denominator.
    #[error("degenerate bound: {0}")]
    Degenerate(String),

    /// Exact coloring exceeded its node budget; best known interval attached.
    #[error("coloring budget exceeded: chromatic number in [{lower}, {upper}]")]
    ColoringBudget { lower: usize, upper: usize },

    /// Every subproblem of an optimizer sweep failed.
    #[error("optimizer encoding failure: {0}")]
    EncodingFailure(String),

    /// Invalid argument outside the other categories.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
