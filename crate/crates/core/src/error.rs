use thiserror::Error;

/// Errors raised by the library. The CLI maps every variant to exit code 2,
/// except [`Error::BoundViolated`] which is a verdict failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotPrime(i64),

    #[error("index {index} is outside the centered range of {domain}")]
    IndexOutOfRange { index: i64, domain: String },

    #[error("index {0} appears more than once")]
    DuplicateIndex(i64),

    #[error("negative mass {value} at index {index}")]
    NegativeMass { index: i64, value: String },

    #[error("masses sum to {0}, not 1")]
    NotNormalized(String),

    #[error("operands live on different domains")]
    DomainMismatch,

    #[error("coefficient is zero in the index group")]
    ZeroCoefficient,

    #[error("the * rearrangement requires a triangle-regular function")]
    StarOnIrregular,

    #[error("function is neither triangle- nor square-regular")]
    IrregularInput,

    #[error("factor {0} is tagged neither triangle nor square")]
    IrregularFactor(usize),

    #[error("sign assignment is invalid: {0}")]
    InvalidSigns(String),

    #[error("empty sequence of functions")]
    EmptySequence,

    #[error("empty set")]
    EmptySet,

    #[error("summand {summand} is not nonincreasing along the target index sequence")]
    InternalShapeViolation { summand: usize },

    #[error("lower bound violated: majorization fails at prefix {failing_prefix}")]
    BoundViolated { failing_prefix: usize },

    #[error("{n} factors exceed the enumeration cap of {max}")]
    TooManyFactors { n: usize, max: usize },

    #[error("factor {0} is not regular and in rearranged position")]
    HypothesisViolated(usize),

    #[error("argument must be nonnegative, got {0}")]
    NegativeArgument(String),

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(String),

    #[error("n = {0} is too small")]
    TooSmall(u64),

    #[error("domain too large for exhaustive search: {0}")]
    DomainTooLarge(String),

    #[error("{0} outcomes exceed the enumeration cap")]
    TooManyOutcomes(u128),

    #[error("invalid Renyi order: {0}")]
    InvalidAlpha(String),

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
