use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("index {index} out of range 1..={max}")]
    OutOfRange { index: usize, max: usize },

    #[error("characteristic mismatch: {left} vs {right}")]
    CharacteristicMismatch { left: u64, right: u64 },

    #[error("ambient mismatch: {left} vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },

    #[error("monomial order mismatch")]
    OrderMismatch,

    #[error("too many variables: {0} (at most {max})", max = crate::algebra::MAX_VARS)]
    TooManyVariables(usize),

    #[error("exponent overflow: per-variable exponents are limited to {max}", max = crate::algebra::MAX_EXPONENT)]
    ExponentOverflow,

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("variable x{index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("invalid field descriptor: {0}")]
    InvalidField(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("degree cap exceeded: intermediate degree {degree} > cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },

    #[error("not a Groebner basis: S-polynomial of elements {i} and {j} has nonzero remainder {remainder}")]
    NotGroebner { i: usize, j: usize, remainder: String },

    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
