use thiserror::Error;

use crate::split::Obstruction;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("vertex {vertex} outside 0..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex set is not independent: {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
    #[error("configurations have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("order is not a permutation of the vertex set")]
    NotPermutation,
    #[error("graph is not split; induced {0}")]
    NotSplit(Obstruction),
    #[error("configuration is not typical: vertex {0} lies in the clique part")]
    NotTypical(usize),
    #[error("distribution is frozen")]
    Frozen,
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("jump bound must be at least {min}, got {k}")]
    BoundTooSmall { k: usize, min: usize },
    #[error("invalid move sequence at step {step}: {reason}")]
    InvalidSequence { step: usize, reason: String },
    #[error("invalid move ({from} -> {to}): {reason}")]
    InvalidMove { from: usize, to: usize, reason: String },
    #[error("search exceeded the cap of {cap} states")]
    ResourceExhausted { cap: usize },
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("clause {index} has {len} literals, expected 3")]
    ClauseSize { index: usize, len: usize },
    #[error("assignment has {got} values, formula has {expected} variables")]
    AssignmentLength { got: usize, expected: usize },
    #[error("clause {0} is not satisfied by the assignment")]
    UnsatisfiedClause(usize),
    #[error("sequence has {len} moves, more than the budget {budget}")]
    OverLength { len: usize, budget: usize },
    #[error("{0}")]
    Format(String),
}
