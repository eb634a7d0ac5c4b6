use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("polynomial division is not exact")]
    NonExactDivision,
    #[error("series {op} requires constant term {expected}")]
    SeriesDomain { op: &'static str, expected: &'static str },
    #[error("cost guard: {what} refused for n = {n} (limit {limit}); pass an override to force")]
    CostGuard { what: &'static str, n: usize, limit: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
