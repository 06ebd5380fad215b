use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("index k = {k} out of range 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("tau = {tau} is not admissible for (m, n) = ({m}, {n})")]
    NotAdmissible { m: u32, n: usize, tau: String },
    #[error("point {0} does not lie in the zonotope")]
    NotInZonotope(String),
    #[error("{0} is not a parking function")]
    InvalidParkingFunction(String),
    #[error("{0} is not strictly increasing")]
    NotStrictlyIncreasing(String),
    #[error("point set is not closed under permutation of coordinates")]
    NotSymmetric,
    #[error("not a set partition of [{n}]: {reason}")]
    InvalidPartition { n: usize, reason: String },
    #[error("orbit count sum is not an integer: {0}")]
    NonIntegralCount(String),
    #[error("n = {n} exceeds the supported maximum {max}")]
    TooLarge { n: usize, max: usize },
    #[error("t = {0} is not of the form -p/k with 1 <= k <= n, 0 <= p < k")]
    NotInGrid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
