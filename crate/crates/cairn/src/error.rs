//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph description (loops, duplicate edges, zero weights,
    /// out-of-range endpoints, empty vertex set).
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// Distribution or distribution set that does not fit the graph it is
    /// used with, or violates a constructor precondition.
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    /// Unparseable user input: files, shorthands, CLI parameter strings.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The request is well-formed but outside what this build can compute
    /// (state space too wide to index, undefined family parameter, ...).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// The caller-supplied work budget ran out before the answer was known.
    /// `examined` counts start distributions examined so far.
    #[error("budget exhausted after examining {examined} distributions")]
    BudgetExceeded { examined: u64 },

    /// A search walked past a certified upper bound. This cannot happen
    /// unless the engine itself is wrong, so it is reported as its own
    /// variant instead of being folded into a result.
    #[error("search exceeded certified bound {bound}; this is a bug")]
    BoundExceeded { bound: u64 },

    /// Two independent computation paths disagreed (pruned vs paranoid,
    /// engine vs rescan). Also a bug class, never a user error.
    #[error("internal cross-check failed: {0}")]
    Inconsistent(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
