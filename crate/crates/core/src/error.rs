use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("image array is not a bijection on 0..{degree}")]
    NotBijective { degree: usize },

    #[error("resource cap exceeded: {what} exceeds {limit}")]
    ResourceCap { what: &'static str, limit: usize },

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("not a normal subgroup: {0}")]
    NotNormal(String),

    #[error("group of order {order} is not a {p}-group")]
    NotPGroup { order: usize, p: u32 },

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("field mismatch: GF({p1}^{m1}) vs GF({p2}^{m2})")]
    FieldMismatch { p1: u32, m1: u32, p2: u32, m2: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("vertex mismatch: {0}")]
    VertexMismatch(String),

    /// A computed identity that must hold failed; this signals a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn field_mismatch(a: &crate::fflinalg::Field, b: &crate::fflinalg::Field) -> Self {
        Error::FieldMismatch {
            p1: a.characteristic(),
            m1: a.degree(),
            p2: b.characteristic(),
            m2: b.degree(),
        }
    }
}
