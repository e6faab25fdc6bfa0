use thiserror::Error;

/// Errors raised by context construction and the algorithms built on it.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GarsideError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("malformed table file: {0}")]
    MalformedTable(String),

    #[error("context invariant violated: {0}")]
    InvariantViolation(String),

    #[error("illegal character {ch:?} at offset {offset}")]
    IllegalCharacter { ch: char, offset: usize },

    #[error("invalid numeric letter {0:?}")]
    InvalidNumber(String),

    #[error("atom {atom} is not defined in a context with {atoms} atoms")]
    UnknownAtom { atom: usize, atoms: usize },

    #[error("expected a positive word")]
    NotPositive,

    #[error("{0} is not a pure simple element")]
    NotPure(String),

    #[error("operation requires {0}")]
    WrongContext(String),

    #[error("word is not trivial")]
    NotTrivial,

    #[error("word is empty")]
    EmptyWord,

    #[error("index {index} out of range for a word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("pair ({i}, {j}) is not removable")]
    NotRemovable { i: usize, j: usize },

    #[error("inputs do not satisfy the precondition: {0}")]
    Precondition(String),

    #[error("length bound {0} exceeded")]
    BoundExceeded(usize),

    #[error("search space of {size} seeds exceeds the guard of {guard}")]
    GuardExceeded { size: u64, guard: u64 },

    #[error("internal contradiction: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, GarsideError>;
