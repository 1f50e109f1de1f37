use thiserror::Error;

/// Errors raised by the exact computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("negative coordinate in {0}")]
    NegativeCoordinate(&'static str),
    #[error("non-positive value: {0}")]
    NonPositive(String),
    #[error("non-primary input: {0}")]
    NotPrimary(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("total degree {degree} exceeds the configured cap {cap}")]
    DegreeOverflow { degree: u32, cap: u32 },
    #[error("integer overflow in exact geometry")]
    Overflow,
    #[error("ray {0:?} is not in the relative interior of the given cone")]
    RayNotInterior(Vec<i64>),
    #[error("fan is not simplicial")]
    NonSimplicial,
    #[error("Monge-Ampere test system stays singular after {0} subdivisions")]
    SingularSystem(usize),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
