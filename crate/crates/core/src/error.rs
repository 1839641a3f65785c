use thiserror::Error;

/// Errors produced by the forest algorithms.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("edge list contains a cycle through vertices {0} and {1}")]
    NotAForest(usize, usize),
    #[error("invalid edge {0}-{1}: {2}")]
    BadEdge(usize, usize, &'static str),
    #[error("vertex {vertex} out of range for order {order}")]
    BadVertex { vertex: usize, order: usize },
    #[error("bad root selection: {0}")]
    BadRoots(String),
    #[error("input must be a connected, nonempty tree")]
    NotConnected,
    #[error("empty input set")]
    EmptyInput,
    #[error("search budget of {0} node expansions exhausted")]
    BudgetExceeded(u64),
    #[error("{what} order {order} exceeds limit {limit}")]
    OrderLimit {
        what: &'static str,
        order: usize,
        limit: usize,
    },
    #[error("ground set of size {size} exceeds partition cap {cap}")]
    SizeLimit { size: usize, cap: usize },
    #[error("component bound {requested} exceeds cap {cap} (guarantee for the capped bound: {guarantee})")]
    CapExceeded {
        requested: usize,
        cap: usize,
        guarantee: f64,
    },
    #[error("vector set grew to {size} entries, budget is {budget}")]
    StateExplosion { size: usize, budget: usize },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}

impl Error {
    /// Whether the error reports an exhausted search or size budget rather
    /// than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded(_)
                | Error::OrderLimit { .. }
                | Error::SizeLimit { .. }
                | Error::StateExplosion { .. }
                | Error::CapExceeded { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
