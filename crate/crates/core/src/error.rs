use crate::polyring::MultiIndex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: expected degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("coefficient matrix is not Hermitian at ({alpha}, {beta}): the polynomial is not real-valued")]
    NonHermitian { alpha: MultiIndex, beta: MultiIndex },

    #[error("zero polynomial is not allowed as an ideal generator")]
    ZeroGenerator,

    #[error("rank {rank} exceeds the dimension {max} of the space of forms")]
    RankTooLarge { rank: u64, max: u64 },

    #[error("generator of degree {degree} exceeds the bound s = {bound}")]
    GeneratorDegree { degree: usize, bound: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
