use thiserror::Error;

/// Errors raised by graph, group and fault-tolerance operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge ({u}, {v}) for a graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("point {point} out of range for degree {degree}")]
    InvalidPoint { point: usize, degree: usize },
    #[error("tuple contains a repeated point {0}")]
    InvalidTuple(usize),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group degree {0} exceeds the supported maximum of 64")]
    DegreeTooLarge(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("orbit grew past the cap of {cap} elements")]
    OrbitTooLarge { cap: usize },
    #[error("universe of {size} elements exceeds the cap of {cap}")]
    UniverseTooLarge { size: u128, cap: usize },
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("host has {host} vertices but basic graph plus spares needs {required}")]
    OrderMismatch { host: usize, required: usize },
    #[error("spare set has {spares} vertices but fault set has {faults}")]
    SizeMismatch { spares: usize, faults: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
