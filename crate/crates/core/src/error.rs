use thiserror::Error;

use crate::combinatorics::KSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("set sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("vertex {vertex} is outside [1, {n}]")]
    VertexOutOfRange { vertex: u32, n: u32 },

    #[error("invalid k-set: {0}")]
    InvalidKSet(String),

    #[error("family mismatch: {0}")]
    FamilyMismatch(String),

    #[error("term order {order} is not defined for k = {k}")]
    OrderNotApplicable { order: &'static str, k: usize },

    #[error("{what} = {value} exceeds the exhaustive bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("{0} is not a prime above 2^60")]
    NotPrime(u64),

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutation is not an involution")]
    NotInvolution,

    #[error("invalid group action: {0}")]
    InvalidGroup(String),

    #[error("predicate violated on {witness}")]
    PredicateViolated { witness: KSet },

    #[error("graph has a triangle {witness}")]
    HasTriangle { witness: KSet },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown campaign `{0}`")]
    UnknownCampaign(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
