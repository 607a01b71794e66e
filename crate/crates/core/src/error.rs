use thiserror::Error;

/// Errors raised by the exact toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("degree {found} is below the required minimum {min}")]
    DegreeTooSmall { found: usize, min: usize },
    #[error("expected a polynomial of degree {expected}, found degree {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("no value supplied for parameter `{0}`")]
    MissingParameter(String),
    #[error("power sums are not those of an integer monic polynomial: {k}*e_{k} = {numerator} is not divisible by {k}")]
    NonIntegralDivision { k: usize, numerator: String },
    #[error("internal divisibility assertion failed: {0}")]
    InternalDivisibility(String),
    #[error("interval endpoint {0} is a root")]
    EndpointIsRoot(String),
    #[error("root iteration did not converge within {0} steps")]
    NonConvergence(usize),
    #[error("syntax error at line {line}, column {column}: expected {expected}, found {found}")]
    Syntax {
        line: usize,
        column: usize,
        expected: String,
        found: String,
    },
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(Hypothesis),
    #[error("no k in 1..={n} makes Q_(kN) nonconstant")]
    NoWitnessInRange { n: usize },
    #[error("{0} is not squarefree")]
    NotSquarefree(String),
    #[error("alpha minimal polynomial is not totally real")]
    AlphaNotTotallyReal,
    #[error("degree constraint violated: {0}")]
    DegreeConstraintViolated(String),
    #[error("polynomial is not eventually of one sign")]
    NotEventuallySigned,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("result check failed: {0}")]
    Postcondition(String),
}

/// Which hypothesis on a parametrized family failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Hypothesis {
    #[error("polynomial is not monic in x (leading coefficient {0})")]
    NotMonic(String),
    #[error("degree {0} is below 2")]
    DegreeBelowTwo(usize),
    #[error("constant term is not a constant +1 or -1 (found {0})")]
    ConstantTermNotUnit(String),
    #[error("no coefficient of x^1..x^(n-1) depends on the parameters")]
    NoNonconstantMiddle,
    #[error("at most 2 parameters are supported, found {0}")]
    TooManyParameters(usize),
    #[error("parameter name `{0}` is reserved or duplicated")]
    BadParameterName(String),
    #[error("document defines more than one family")]
    MultipleFamilies,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
