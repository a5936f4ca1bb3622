use thiserror::Error;

use crate::cycle::MonoidKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Vertex count outside the supported range `3..=255`.
    #[error("invalid vertex count {0}: expected 3 <= n <= 255")]
    InvalidOrder(usize),

    #[error("context mismatch: expected n = {expected}, found {found}")]
    ContextMismatch { expected: usize, found: usize },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("transformation is not a member of {0}")]
    NotMember(MonoidKind),

    #[error("operation is only defined for End and wEnd, got {0}")]
    UnsupportedKind(MonoidKind),

    #[error("kernels differ: no dihedral factor exists")]
    KernelMismatch,

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    /// A closure or enumeration grew past the configured element cap.
    #[error("element cap of {cap} exceeded")]
    ResourceCap { cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
