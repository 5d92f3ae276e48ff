use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("coefficient {coeff} at weight {weight} is negative; input is not a non-negative combination of the basis")]
    NegativeCoefficient { weight: usize, coeff: i64 },

    #[error("index {index} out of range (maximum {max})")]
    IndexOutOfRange { index: u64, max: u64 },

    #[error("digit {digit} at position {position} out of range (maximum {max})")]
    DigitOutOfRange { position: usize, digit: u64, max: u64 },

    #[error("Verlinde sum residual {residual:e} exceeds tolerance")]
    NumericalInstability { residual: f64 },

    #[error("power iteration did not converge after {iterations} iterations")]
    NonConvergence { iterations: usize },

    #[error("the odd line is only defined for odd p")]
    EvenPrime,

    #[error("{digits} digits over p = {p} cannot determine coefficients up to t^{truncation}")]
    InsufficientPrecision { p: u64, digits: usize, truncation: usize },

    #[error("series is not of the form (1 - t)^e (failed at p-adic level {level})")]
    NotAPurePower { level: usize },

    #[error("series constant term must be 1, found {0}")]
    BadConstantTerm(u64),

    #[error("{n} is not a power of {p}")]
    NotPPower { n: u64, p: u64 },

    #[error("top dimension {top} is not a unit of sign +-1 modulo {p}")]
    BadTopDim { top: u64, p: u64 },

    #[error("provider {0} has no dim Hom(X, 1) attached")]
    MissingHomDim(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::NegativeCoefficient { .. } => "NegativeCoefficient",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DigitOutOfRange { .. } => "DigitOutOfRange",
            Error::NumericalInstability { .. } => "NumericalInstability",
            Error::NonConvergence { .. } => "NonConvergence",
            Error::EvenPrime => "EvenPrime",
            Error::InsufficientPrecision { .. } => "InsufficientPrecision",
            Error::NotAPurePower { .. } => "NotAPurePower",
            Error::BadConstantTerm(_) => "BadConstantTerm",
            Error::NotPPower { .. } => "NotPPower",
            Error::BadTopDim { .. } => "BadTopDim",
            Error::MissingHomDim(_) => "MissingHomDim",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}
