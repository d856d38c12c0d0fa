use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected {expected} lengths, found {found}")]
    LengthCount { expected: usize, found: usize },
    #[error("lengths must be non-empty and every entry nonzero")]
    InvalidLengths,
    #[error("k must be at least 1")]
    InvalidK,
    #[error("parameter sequence has {found} entries, {needed} required")]
    AlphaTooShort { needed: usize, found: usize },
    #[error("parameters alpha_{first} and alpha_{second} coincide; distinct values required")]
    RepeatedAlpha { first: usize, second: usize },
    #[error("alpha_{index} is zero; harmonic numbers undefined")]
    ZeroAlpha { index: usize },
    #[error("inner series must have zero constant term")]
    NonzeroConstantTerm,
    #[error("series logarithm requires constant term 1")]
    ConstantTermNotOne,
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("{needed} arguments required, {found} given")]
    TooFewArguments { needed: usize, found: usize },
    #[error("unknown kind {0:?}")]
    UnknownKind(String),
    #[error("{0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
