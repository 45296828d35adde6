use thiserror::Error;

/// Errors produced by the graph engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("edge ({u},{v}) is not present in the graph")]
    MissingEdge { u: usize, v: usize },

    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("edge-list parse error on line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("graph has no edges")]
    NoEdges,

    #[error("domination precondition violated: N[{u}] is not contained in N[{v}]")]
    DominationRequired { u: usize, v: usize },

    #[error("invalid partition of N({x}): {message}")]
    InvalidPartition { x: usize, message: String },

    /// `partial` is the graph6 string of the graph reached so far.
    #[error("lozinization budget of {budget} steps exhausted after {steps} steps (reached {partial})")]
    BudgetExceeded {
        budget: usize,
        steps: usize,
        partial: String,
    },

    #[error("cache format error on line {line}: {message}")]
    CacheFormat { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
