use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected 0 < {den} < {num}")]
    FractionOutOfRange { num: i64, den: i64 },
    #[error("{num}/{den} is not in lowest terms")]
    NotCoprime { num: i64, den: i64 },
    #[error("invalid continued fraction entries: {0}")]
    InvalidEntries(String),
    #[error("cone generators are linearly dependent")]
    Parallel,
    #[error("vector ({0}, {1}) is not primitive")]
    NotPrimitive(i64, i64),
    #[error("the cone is basic (p = 0, q = 1)")]
    BasicCone,
    #[error("invalid quotient type: {0}")]
    InvalidType(String),
    #[error("the type is not Gorenstein")]
    NotGorenstein,
    #[error("size guard exceeded: {needed} comparisons > limit {limit}")]
    GuardExceeded { needed: u64, limit: u64 },
    #[error("the type admits no crepant full resolution")]
    NotResolvable,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
