use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The matrix text format could not be read.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An operation that requires a strongly lonesum matrix received one that is not.
    #[error("matrix is not strongly lonesum")]
    NotLonesum,

    /// A backtracking search hit its node budget before reaching a verdict.
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },

    /// An exhaustive computation would exceed its configured size limit.
    #[error("{what} needs {required} cases, above the limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        required: u128,
        limit: u128,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
