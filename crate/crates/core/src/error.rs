use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An operation that requires a connected graph received a disconnected one.
    #[error("graph is disconnected (fiedler value within tolerance of zero)")]
    Disconnected,

    /// The Jacobi eigensolver did not reach the off-diagonal tolerance.
    #[error("eigensolver did not converge on a {n}x{n} matrix")]
    EigenNonConvergence { n: usize },

    /// Precondition violation on operation inputs.
    #[error("domain error: {0}")]
    Domain(String),

    /// Invalid or infeasible configuration (layout, plan, candidate budget).
    #[error("configuration error: {0}")]
    Config(String),

    /// Exhaustive enumeration refused: search space over budget.
    #[error("enumeration budget exceeded: C({n_c}, {k}) > {budget}")]
    EnumerationBudget { n_c: usize, k: usize, budget: u64 },

    /// A text format (plan file, layout file, CSV) failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// Required data is missing for a requested output (e.g. plot axis).
    #[error("missing data: {0}")]
    MissingData(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
