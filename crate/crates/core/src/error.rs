use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The edge list does not describe a tree.
    #[error("invalid tree: {0}")]
    InvalidTree(String),

    /// A line of the tree text format could not be parsed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Family or analysis parameters outside their domain.
    #[error("parameter out of domain: {0}")]
    Domain(String),

    /// A transformation was applied at a site lacking the required local structure.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("coefficient vectors have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    /// Resource guard tripped; callers opt in to larger inputs explicitly.
    #[error("n = {n} exceeds the configured limit of {limit} (override to proceed)")]
    TooLarge { n: usize, limit: usize },
}
