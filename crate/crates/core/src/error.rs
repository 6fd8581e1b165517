use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failures raised by the exact-arithmetic, lattice and Gaussian engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix does not have full column rank")]
    RankDeficient,
    #[error("matrix is singular")]
    Singular,
    #[error("lattices are not commensurate")]
    NotCommensurate,
    #[error("second lattice is not contained in the first")]
    NotSublattice,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different quadratic fields Q(sqrt({0})) and Q(sqrt({1}))")]
    MixedField(u64, u64),
    #[error("quadratic field radicand {0} is not a squarefree integer >= 2")]
    InvalidRadicand(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("Gram matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("map does not scale the Gram matrix by a rational multiplier")]
    NotSimilarity,
    #[error("map reverses orientation")]
    OrientationReversing,
    #[error("maps act on different lattices")]
    LatticeMismatch,
    #[error("multiplier {0} is not the square of a rational")]
    NotCoincidence(String),
    #[error("gcd of two zero Gaussian integers")]
    BothZero,
    #[error("{0} is not a prime congruent to 1 mod 4")]
    NotSplitPrime(String),
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("Gaussian rational does not have unit modulus")]
    NotUnitModulus,
    #[error("class of order {order} does not divide dimension {dim}")]
    DimensionViolation { order: u32, dim: usize },
    #[error("prime factor exceeds 64 bits")]
    TooLarge,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable identifier used in machine-readable output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RankDeficient => "RankDeficient",
            Error::Singular => "Singular",
            Error::NotCommensurate => "NotCommensurate",
            Error::NotSublattice => "NotSublattice",
            Error::DivisionByZero => "DivisionByZero",
            Error::MixedField(..) => "MixedField",
            Error::InvalidRadicand(_) => "InvalidRadicand",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotSymmetric => "NotSymmetric",
            Error::NotPositiveDefinite => "NotPositiveDefinite",
            Error::NotSimilarity => "NotSimilarity",
            Error::OrientationReversing => "OrientationReversing",
            Error::LatticeMismatch => "LatticeMismatch",
            Error::NotCoincidence(_) => "NotCoincidence",
            Error::BothZero => "BothZero",
            Error::NotSplitPrime(_) => "NotSplitPrime",
            Error::ZeroInput => "ZeroInput",
            Error::NotUnitModulus => "NotUnitModulus",
            Error::DimensionViolation { .. } => "DimensionViolation",
            Error::TooLarge => "TooLarge",
            Error::Parse(_) => "ParseError",
        }
    }
}
