//! Exact arithmetic tower.
//!
//! [`Scalar`] is an arbitrary-precision rational. [`LaurentPoly`] is a
//! Laurent polynomial in the half-character variable `μ`; the circle
//! character `t^m` is stored as `μ^{2m}`, which lets half-integral powers of
//! `λ = μ²` (needed by the Â fixed-point formula) share a ring with the
//! integral ones. [`RationalFunc`] keeps quotients in a canonical form so
//! equality is syntactic. [`QSeries`] truncates power series in `q` over any
//! [`Ring`].

mod dense;
mod laurent;
mod qseries;
mod rational_func;

pub use laurent::LaurentPoly;
pub use qseries::{expand_geometric, GeometricFactor, QSeries};
pub use rational_func::{sum_fractions, Constancy, RationalFunc};

use core::fmt;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Scalar = BigRational;

/// Shorthand for an integer-valued [`Scalar`].
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Commutative ring with unit, as needed for truncated series arithmetic.
///
/// Methods take references; the `_ref` suffix keeps them from colliding with
/// the operator traits that the concrete types also implement.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn is_ring_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// Embeds a rational constant.
    fn from_scalar(c: &Scalar) -> Self;

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
}

impl Ring for Scalar {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn is_ring_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn from_scalar(c: &Scalar) -> Self {
        c.clone()
    }
}

/// Sum of an iterator of ring elements.
pub fn ring_sum<R: Ring, I: IntoIterator<Item = R>>(items: I) -> R {
    items.into_iter().fold(R::ring_zero(), |acc, x| acc.add_ref(&x))
}

/// Writes a coefficient-times-monomial term with sign handling shared by the
/// pretty printers. `first` controls whether a leading `+` is omitted.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    coeff: &Scalar,
    body: &str,
    first: bool,
) -> fmt::Result {
    let negative = coeff < &Scalar::zero();
    let magnitude = if negative { -coeff } else { coeff.clone() };
    if first {
        if negative {
            f.write_str("-")?;
        }
    } else if negative {
        f.write_str(" - ")?;
    } else {
        f.write_str(" + ")?;
    }
    if body.is_empty() {
        write!(f, "{magnitude}")
    } else if magnitude.is_one() {
        f.write_str(body)
    } else {
        write!(f, "{magnitude}*{body}")
    }
}
