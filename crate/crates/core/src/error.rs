use thiserror::Error;

/// Ways a constructed solvable model can break the structural constraints
/// every solvable character graph satisfies.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolvableViolation {
    #[error("graph vertex set does not equal the declared prime set")]
    VertexSetMismatch,
    #[error("complement is not bipartite (odd cycle {0:?})")]
    ComplementNotBipartite(Vec<u128>),
    #[error("graph on {0} vertices has no triangle and is not a 4-cycle")]
    NeitherTriangleNorC4(usize),
    #[error("label {label} requires {requirement}")]
    LabelShape {
        label: &'static str,
        requirement: &'static str,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A numeric input lies outside the supported range (factorization cap, exponent cap).
    #[error("out of range: {0}")]
    OutOfRange(String),
    /// An exact search was asked to run beyond its vertex cap.
    #[error("{operation} supports at most {cap} vertices, got {size}")]
    TooLarge {
        operation: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("{0} is not prime")]
    NotPrime(u128),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(u128),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(u128),
    #[error("vertex sets intersect in {0:?}")]
    VertexClash(Vec<u128>),
    #[error("invalid solvable model: {0}")]
    Solvable(#[from] SolvableViolation),
    #[error(
        "|pi(2^{alpha}-1)| = {minus} differs from |pi(2^{alpha}+1)| = {plus}{}",
        if minus.abs_diff(*plus) == 1 { " (near-balanced: sizes differ by one)" } else { "" }
    )]
    AsymmetricPiSizes { alpha: u32, minus: usize, plus: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("certificate check failed: {0}")]
    CertificateFailure(String),
}

impl Error {
    /// Range and size errors map to their own CLI exit status.
    pub fn is_range_error(&self) -> bool {
        matches!(self, Error::OutOfRange(_) | Error::TooLarge { .. })
    }

    /// An asymmetric α whose π-sizes differ by exactly one.
    pub fn is_near_balanced(&self) -> bool {
        matches!(self, Error::AsymmetricPiSizes { minus, plus, .. } if minus.abs_diff(*plus) == 1)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
