use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field order mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    OrderMismatch { left: u32, right: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot embed Q(zeta_{from}) into Q(zeta_{to}): {from} does not divide {to}")]
    NotDivisible { from: u32, to: u32 },

    #[error("field order must be positive")]
    ZeroOrder,

    #[error("expected {expected} coefficients, got {got}")]
    BadLength { expected: usize, got: usize },

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("invalid hyperplane: {0}")]
    InvalidHyperplane(String),

    #[error("hyperplane index {index} out of range for an arrangement of {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("not an element of the intersection lattice")]
    NotAFlat,

    #[error("rank {rank} out of range 0..={max}")]
    RankOutOfRange { rank: usize, max: usize },

    #[error("lattice exceeds the flat limit of {limit}")]
    TooManyFlats { limit: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown arrangement `{0}`")]
    UnknownArrangement(String),

    #[error("refused: {0}")]
    Refused(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("cache: {0}")]
    Cache(String),
}
