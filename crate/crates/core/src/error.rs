use thiserror::Error;

use crate::rational::{format_ratio, Rational};
use crate::trigraph::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge {0}-{1} is not an edge of the graph")]
    EdgeNotInGraph(usize, usize),

    #[error("triangle {0:?} contains two edges of the proposed triangle-independent set")]
    NotTriangleIndependent([usize; 3]),

    #[error("invalid trigraph ({} violation(s), first: {})", .0.len(), .0.first().map(|v| v.to_string()).unwrap_or_default())]
    InvalidTrigraph(Vec<Violation>),

    #[error("ordered pair ({0}, {1}) is not an S-edge")]
    NotAnSEdge(usize, usize),

    #[error("partition covers {got} vertices but the graph has {expected}")]
    PartitionSize { got: usize, expected: usize },

    #[error("vertex {0} is not assigned to either side")]
    PartialPartition(usize),

    #[error("{what} supports at most {limit} vertices, got {n}")]
    SizeLimit { what: &'static str, limit: usize, n: usize },

    #[error("branch budget of {budget} exhausted after covering probability mass {}", format_ratio(.explored_mass))]
    BranchBudget { budget: u64, explored_mass: Rational },

    #[error("trace does not replay on this trigraph: {0}")]
    TraceMismatch(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid join specification: {0}")]
    JoinSpec(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
