use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("vertices {0} and {1} are in different components")]
    Unreachable(usize, usize),
    #[error("{what} has size {size}, above the cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("monomials over different numbers of variables ({0} vs {1})")]
    MixedArity(usize, usize),
    #[error("ideal does not match the tree: {0}")]
    IdealMismatch(String),
    #[error("monomial support is not a closed neighborhood")]
    NotANeighborhood,
    #[error("vertex {0} does not carry a minimal generator")]
    NotAGenerator(usize),
    #[error("generators of I are not the disjoint union of those of J and K")]
    NotAPartition,
    #[error("generators have different degrees")]
    MixedDegrees,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid generator order: {0}")]
    InvalidOrder(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
