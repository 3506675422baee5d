use thiserror::Error;

/// Error type shared by every module in this crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Construction rejected because the input graph is not connected.
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    /// An enumeration would exceed the configured size budget.
    #[error("order {required} exceeds enumeration budget {budget}")]
    BudgetExceeded { required: usize, budget: usize },

    /// Iterative eigensolver failed to reach its residual target.
    #[error("no convergence after {iterations} iterations (residual {residual:.3e})")]
    NoConvergence { iterations: usize, residual: f64 },

    /// A k-th value was requested beyond the number of available values.
    #[error("index {k} out of range (available: {available})")]
    OutOfRange { k: usize, available: usize },

    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Wraps another error with the 1-based line number of a stream.
    #[error("line {ordinal}: {source}")]
    AtLine {
        ordinal: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn at_line(self, ordinal: usize) -> Error {
        Error::AtLine {
            ordinal,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
