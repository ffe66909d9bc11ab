use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rational function was built with a zero denominator.
    ZeroDenominator,
    /// Inverting `1 ± q^0 μ^b` has no meaning as a q-series.
    NonInvertibleSeries,
    /// A power series was supplied with fewer coefficients than needed.
    InsufficientOrder { needed: usize, given: usize },
    /// A characteristic power series must start with 1.
    SeriesNotNormalized,
    /// Multiplicative sequences in Pontryagin classes need an even series.
    SeriesNotEven { power: usize },
    /// A fixed point carries a zero weight, so it would not be isolated.
    ZeroWeight { point: usize, index: usize },
    /// A weight list does not have length `dim / 2`.
    WeightListLength { point: usize, expected: usize, found: usize },
    /// Orientation signs must be `+1` or `-1`.
    InvalidSign { point: usize, sign: i32 },
    /// Manifold dimensions are even and non-negative.
    OddDimension(u32),
    /// The fixed-point set of the action is empty.
    NoFixedPoints,
    /// Pontryagin data disagrees with the fixed-point data on dimension.
    DimensionMismatch { expected: u32, found: u32 },
    /// A Pontryagin number is attached to a partition of the wrong weight.
    PartitionWeight { partition: String, dim: u32 },
    /// Input to the factorization check is not the character of a real
    /// S¹-representation.
    NotACharacter(String),
    /// Weight sums disagree mod 2 although the difference is symmetric and
    /// divisible by `(1 - t)^3`. Never expected on valid input.
    Lemma2Inconsistent,
    /// Evaluation hit a pole.
    Pole,
    /// A value in `λ` was requested for an expression with odd powers of `μ`.
    HalfIntegralPowers,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "zero denominator"),
            Error::NonInvertibleSeries => {
                write!(f, "non-invertible series: inverted factor has no positive q-power")
            }
            Error::InsufficientOrder { needed, given } => write!(
                f,
                "insufficient series order: need {needed} coefficients, got {given}"
            ),
            Error::SeriesNotNormalized => write!(f, "characteristic series must satisfy Q(0) = 1"),
            Error::SeriesNotEven { power } => {
                write!(f, "characteristic series has a nonzero odd coefficient at x^{power}")
            }
            Error::ZeroWeight { point, index } => {
                write!(f, "zero weight at fixed point {point}, position {index}")
            }
            Error::WeightListLength { point, expected, found } => write!(
                f,
                "weight-list length at fixed point {point}: expected {expected}, found {found}"
            ),
            Error::InvalidSign { point, sign } => {
                write!(f, "sign at fixed point {point} must be +1 or -1, found {sign}")
            }
            Error::OddDimension(d) => write!(f, "dimension must be even, found {d}"),
            Error::NoFixedPoints => write!(f, "fixed point list is empty"),
            Error::DimensionMismatch { expected, found } => write!(
                f,
                "pontryagin data has dimension {found}, manifold has dimension {expected}"
            ),
            Error::PartitionWeight { partition, dim } => write!(
                f,
                "partition {partition} does not have weight dimension/4 for dimension {dim}"
            ),
            Error::NotACharacter(why) => write!(f, "not a real S1-character: {why}"),
            Error::Lemma2Inconsistent => write!(
                f,
                "divisible symmetric difference with odd weight-sum difference"
            ),
            Error::Pole => write!(f, "evaluation point is a pole"),
            Error::HalfIntegralPowers => {
                write!(f, "expression has odd powers of mu; evaluate in mu instead of lambda")
            }
        }
    }
}

impl core::error::Error for Error {}
