use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("closure exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("generator is not invertible")]
    NotInvertible,

    #[error("group exponent {exponent} does not divide 24")]
    UnsupportedExponent { exponent: usize },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("not a class function of this table: {0}")]
    NotAClassFunction(String),

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("group is not abelian")]
    NotAbelian,

    #[error("wrong group: {0}")]
    WrongGroup(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("matrices do not define a homomorphism")]
    NotAHomomorphism,

    #[error("Clifford relation fails for pair ({mu}, {nu})")]
    NotClifford { mu: usize, nu: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
