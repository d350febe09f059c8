use belab_core::GraphError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not a prime below 2^16")]
    NotPrime(u32),
    #[error("{0} variables exceed the packed monomial limit of {max}", max = crate::monomial::MAX_VARS)]
    TooManyVariables(usize),
    #[error("ring has {ring} vertices but the graph has {graph}")]
    SizeMismatch { ring: usize, graph: usize },
    #[error("exponent overflow (an exponent would exceed 127)")]
    ExponentOverflow,
    #[error("work budget exceeded: {what} passed {limit}")]
    BudgetExceeded { what: &'static str, limit: u64 },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
