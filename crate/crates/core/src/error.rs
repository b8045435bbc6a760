use thiserror::Error;

/// A malformed input file or argument, located by 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring must have at least one variable")]
    EmptyRing,
    #[error("duplicate variable identifier `{0}`")]
    DuplicateVariable(String),
    #[error("{variables} variables but {caps} caps")]
    LengthMismatch { variables: usize, caps: usize },
    #[error("negative cap {cap} for variable `{variable}`")]
    NegativeCap { variable: String, cap: i64 },
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("monomial has {found} exponents, ring has {expected} variables")]
    MonomialArity { expected: usize, found: usize },
    #[error("exponent {exponent} of `{variable}` exceeds its cap {cap}")]
    ExponentExceedsCap {
        variable: String,
        exponent: u32,
        cap: u32,
    },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("partition {0} does not fit the box")]
    PartitionOutsideBox(String),
    #[error("product has degree {found}, top degree is {expected}")]
    DegreeMismatch { expected: u64, found: u64 },
    #[error("internal consistency failure: {numerator} is not divisible by {denominator}")]
    InexactDivision {
        numerator: String,
        denominator: String,
    },
    #[error("multinomial parts sum to {found}, expected {expected}")]
    MultinomialSum { expected: u64, found: u64 },
    #[error("q = 0 is a pole of the multivariate Tutte polynomial")]
    TuttePole,
    #[error("expected {expected} values, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("{what} is the zero vector")]
    ZeroVector { what: String },
    #[error("{what} has {found} coordinates, expected {expected}")]
    WrongCoordinateCount {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("realization violates incidence of point {point} on hyperplane {hyperplane}")]
    IncidenceViolated { point: usize, hyperplane: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
