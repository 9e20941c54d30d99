use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring spec: {0}")]
    InvalidSpec(String),

    #[error("presentation `{name}` does not define the expected ring: {reason}")]
    NonConfluentPresentation { name: String, reason: String },

    #[error("ring order {0} exceeds the supported maximum of {max}", max = crate::ring::MAX_ORDER)]
    OrderTooLarge(usize),

    #[error("the ideal is the whole ring")]
    WholeRingIdeal,

    #[error("the ideal is not radical")]
    NotRadical,

    #[error("graph with {0} vertices exceeds the clique search guard")]
    TooLarge(usize),

    #[error("biclique side {0} exceeds the supported maximum of 5")]
    MTooLarge(usize),

    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    GraphTooLarge(usize),

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("clique hypothesis violated: clique number is {0}")]
    CliqueHypothesisViolated(usize),

    #[error("unknown catalog entry `{0}`")]
    UnknownRing(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
