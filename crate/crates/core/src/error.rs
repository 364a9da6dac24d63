use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("exponent overflow (exponents must stay below 2^31)")]
    ExponentOverflow,

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid variable table: {0}")]
    InvalidVariables(String),

    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("division by zero in the coefficient field")]
    DivisionByZero,

    #[error("incompatible coefficient fields: {0}")]
    IncompatibleField(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("Groebner step limit of {limit} processed S-pairs exceeded")]
    StepLimitExceeded { limit: usize },

    #[error("enumeration of {points} points exceeds the cap of {cap}")]
    CapExceeded { points: u128, cap: u64 },

    #[error("family hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("not provided: {0}")]
    NotProvided(String),

    #[error("{phase} phase failed: {source}")]
    Phase {
        phase: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn in_phase(self, phase: &'static str) -> Error {
        Error::Phase {
            phase,
            source: Box::new(self),
        }
    }
}
