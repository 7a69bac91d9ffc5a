use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("element {element} is outside a ground set of size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("ground set of size {size} exceeds the enumeration cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("family does not contain the empty set")]
    MissingEmptySet,
    #[error("family is not downward closed: {member} is listed but {missing} is not")]
    NotDownwardClosed { member: String, missing: String },
    #[error("{0} is independent in the inner system but not in the outer one")]
    NestingViolated(String),
    #[error("the two systems live on different ground sets")]
    GroundMismatch,
    #[error("rank {rank} is smaller than the truncation depth {depth}")]
    RankTooSmall { rank: usize, depth: usize },
    #[error("{0} is dependent")]
    Dependent(String),
    #[error("not a matroid: {0}")]
    NotAMatroid(String),
    #[error("{0}")]
    Parse(String),
    #[error("structural mismatch: {0}")]
    Structure(String),
    #[error("search bound exhausted: {0}")]
    BoundExhausted(String),
}

impl MatroidError {
    /// Resource-bound failures, as opposed to bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, MatroidError::CapExceeded { .. } | MatroidError::BoundExhausted(_))
    }
}
