use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier of {required} elements exceeds the bound {bound}")]
    CarrierTooLarge { required: u128, bound: usize },

    #[error("invariant factors must be positive and form a divisibility chain: {0:?}")]
    BadInvariantFactors(Vec<u64>),

    #[error("ill-formed structure constants at basis pair ({i}, {j}): {reason}")]
    IllFormedConstants { i: usize, j: usize, reason: String },

    #[error("multiplication is not commutative at basis pair ({i}, {j})")]
    NotCommutative { i: usize, j: usize },

    #[error("multiplication is not associative at basis triple ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },

    #[error("declared unit fails u*x = x at carrier element {element}")]
    NoUnit { element: usize },

    #[error("b_1 is not a unit: b_1 * b_{index} differs from b_{index}")]
    BadUnit { index: usize },

    #[error("the zero ring is not accepted here")]
    ZeroRing,

    #[error("element {0:?} does not have the ring's coordinate shape")]
    BadElement(Vec<u64>),

    #[error("ideal does not belong to this ring")]
    ForeignIdeal,

    #[error("ring homomorphism check failed: {0}")]
    NotAHomomorphism(String),

    #[error("ring is not local")]
    NotLocal,

    #[error("ring has a unique minimal ideal; use the lifting path")]
    UniqueMinimalIdeal,

    #[error("ring is already a product of local chain rings")]
    AlreadyChainLocalProduct,

    #[error("shift search needs {required} tuples, cap is {cap}")]
    SearchSpaceTooLarge { required: u128, cap: u64 },

    #[error("expected {expected} shifts, got {got}")]
    ShiftCount { expected: usize, got: usize },

    #[error("at least one ideal is required")]
    NoIdeals,

    #[error("lattice is not of full rank")]
    RankDeficient,

    #[error("lattice is not closed under multiplication by the order")]
    NotAnIdeal,

    #[error("order rank {rank} exceeds the bound {bound}")]
    RankTooLarge { rank: usize, bound: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("period {required} exceeds the bound {bound}")]
    PeriodTooLarge { required: u128, bound: u64 },

    #[error("moduli must be positive")]
    BadModulus,

    #[error("invalid bound: {0}")]
    InvalidBound(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
