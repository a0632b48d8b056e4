//! Error types, one enum per subsystem.

use crate::poset::MAX_ELEMENTS;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("relation cycle through `{0}`")]
    CycleDetected(String),
    #[error("posets are capped at {MAX_ELEMENTS} elements, got {0}")]
    TooManyElements(usize),
    #[error("not an upper set: something above `{0}` is missing")]
    NotAnUpperSet(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("operands belong to different posets")]
    PosetMismatch,
    #[error("arithmetic overflow in expression values")]
    ArithmeticOverflow,
    #[error("rewrite not applicable: pair absent or already a near-chain")]
    NotApplicable,
    #[error("not monotone: value at `{lower}` exceeds value at `{upper}`")]
    NotMonotone { lower: String, upper: String },
    #[error("expression terms must be irreducible upper sets")]
    NotIrreducibleTerm,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("not an irreducible upper set")]
    NotIrreducible,
    #[error("interior generator search bound exceeded after {retries} retries")]
    SearchBoundExceeded { retries: u32 },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatroidError {
    #[error("rank {r} out of range for ground set of size {n} (need 0 <= r <= n <= 6)")]
    OutOfRange { r: usize, n: usize },
    #[error("element index {0} outside the ground set")]
    UnknownElement(usize),
    #[error("ground sets have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("ground set of size {0} too large (need n <= 6)")]
    GroundSetTooLarge(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} listed twice")]
    DuplicatePrime(u64),
    #[error("multiplicity value at subset mask {0} must be positive")]
    ZeroValue(u32),
    #[error("rank table has wrong length: got {0}, expected {1}")]
    BadTableLength(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CountError {
    #[error("count exceeds 64 bits")]
    Overflow,
    #[error("count of `{descriptor}` aborted after {millis} ms budget")]
    BudgetExceeded { descriptor: String, millis: u64 },
    #[error("sweep supports n <= {max}, got {n}")]
    SweepTooLarge { n: usize, max: usize },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}
