use thiserror::Error;

use crate::rootdata::Weight;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system type {family}{rank}: {reason}")]
    InvalidType {
        family: String,
        rank: usize,
        reason: String,
    },

    #[error("weight {weight} has {got} coordinates but the rank is {expected}")]
    RankMismatch {
        weight: Weight,
        expected: usize,
        got: usize,
    },

    #[error("weight {0} is not dominant integral")]
    NotDominant(Weight),

    #[error("word {word:?} is not reduced (fails at position {position})")]
    NotReduced { word: Vec<usize>, position: usize },

    #[error("letter {letter} is out of range 1..={rank}")]
    BadLetter { letter: usize, rank: usize },

    #[error("not a positive root: {0}")]
    UnknownRoot(String),

    #[error("exponent vectors have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("minimum of an empty set")]
    EmptySet,

    #[error(
        "vector of weight depth {got:?} does not belong to the weight space of depth {expected:?}"
    )]
    WeightMismatch { expected: Vec<u32>, got: Vec<u32> },

    #[error("invalid monomial order `{0}`")]
    InvalidOrder(String),

    #[error("{what}: projected size {projected} exceeds the budget {cap}")]
    Budget {
        what: String,
        projected: u128,
        cap: u128,
    },

    #[error(
        "sequence is probably not birational: weight space {weight} of V{highest} \
         has only {found} independent monomials, expected {expected}"
    )]
    NotBirational {
        highest: Weight,
        weight: Weight,
        found: usize,
        expected: usize,
    },

    #[error(
        "rank {rank} exceeds the census limit {limit} \
         (at least {classes} commutation classes of reduced words); pass the long-run flag to proceed"
    )]
    CensusTooLarge {
        rank: usize,
        limit: usize,
        classes: u128,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
