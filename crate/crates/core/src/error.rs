use alloc::string::String;

use crate::Vector;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("a cone needs at least one generator")]
    EmptyGenerators,
    #[error("cone generators must be nonzero")]
    ZeroGenerator,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unsupported dimension {0} (supported: 1..=3)")]
    UnsupportedDimension(usize),
    #[error("{0} is not in the cone")]
    NotInCone(Vector),
    #[error("operation needs a nonempty set")]
    EmptySet,
    #[error("gap {0} is not in the cone")]
    GapNotInCone(Vector),
    #[error("0 cannot be a gap")]
    ZeroGap,
    #[error("not closed under addition: gap {gap} = {left} + {right}")]
    NotClosed { gap: Vector, left: Vector, right: Vector },
    #[error("the semigroup has no gaps")]
    NoGaps,
    #[error("search region for the minimal elements of X_S could not be certified")]
    BoundUncertain,
    #[error("{0} is not a special gap")]
    NotSpecialGap(Vector),
    #[error("{0} is not a minimal generator")]
    NotMinimalGenerator(Vector),
    #[error("{0} is not in the semigroup")]
    NotInSemigroup(Vector),
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("B(S) is empty")]
    EmptyBSet,
    #[error("|I_C(k)| has the wrong parity for the requested kind")]
    ParityMismatch,
    #[error("k must be nonzero")]
    KZero,
    #[error("semigroup is not a root (B(S) is nonempty)")]
    NotARoot,
    #[error("no primary positioned semigroup exists for k = {0}")]
    NoPrimaryExists(Vector),
    #[error("the odd-parity construction needs the cone N^d")]
    OddCaseUnsupportedCone,
    #[error("|I_C(k)| = {size} exceeds the cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("weights must be strictly positive")]
    InvalidWeights,
}
