use super::{dense, LaurentPoly, Ring, Scalar};
use crate::{Error, Result};
use alloc::format;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_traits::{One, Zero};

/// Quotient of Laurent polynomials in `μ`, always held in canonical form:
///
/// - numerator and denominator are ordinary polynomials in `μ` (no negative
///   powers on either side);
/// - they share no common factor, powers of `μ` included;
/// - the denominator is monic;
/// - zero is `0 / 1`.
///
/// Two values are equal exactly when their canonical forms coincide, so the
/// derived `PartialEq` is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Outcome of [`RationalFunc::constancy`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constancy {
    Constant(Scalar),
    /// Carries the canonical form as witness.
    NotConstant(RationalFunc),
}

impl Constancy {
    pub fn constant(&self) -> Option<&Scalar> {
        match self {
            Constancy::Constant(c) => Some(c),
            Constancy::NotConstant(_) => None,
        }
    }
}

impl RationalFunc {
    /// Builds `num / den` and brings it to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(canonical(&num, &den))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        canonical(&p, &LaurentPoly::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self { num: LaurentPoly::constant(c), den: LaurentPoly::one() }
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Re-runs canonicalization. The result always equals `self`; exposed so
    /// idempotence can be checked.
    pub fn canonicalized(&self) -> Self {
        canonical(&self.num, &self.den)
    }

    /// Decides constancy in `μ` (and hence in `λ`).
    pub fn constancy(&self) -> Constancy {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(c), Some(d)) if d.is_one() => Constancy::Constant(c),
            _ => Constancy::NotConstant(self.clone()),
        }
    }

    /// True when the canonical denominator is a single power of `μ`, i.e. the
    /// value is really a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.terms().count() == 1
    }

    /// `deg num < deg den`: the function tends to zero as `μ → ∞`.
    pub fn vanishes_at_infinity(&self) -> bool {
        match (self.num.max_exp(), self.den.max_exp()) {
            (None, _) => true,
            (Some(n), Some(d)) => n < d,
            (Some(_), None) => unreachable!("canonical denominator is nonzero"),
        }
    }

    /// Value at `μ = x`.
    pub fn eval(&self, x: &Scalar) -> Result<Scalar> {
        let d = self.den.eval(x)?;
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(x)? / d)
    }

    /// Value at `λ = x` (`λ = μ²`). Requires even support on both sides.
    pub fn eval_lambda(&self, x: &Scalar) -> Result<Scalar> {
        if !self.has_even_support() {
            return Err(Error::HalfIntegralPowers);
        }
        let d = self.den.eval_lambda(x)?;
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval_lambda(x)? / d)
    }

    pub fn has_even_support(&self) -> bool {
        self.num.has_even_support() && self.den.has_even_support()
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(canonical(&(&self.num * &rhs.den), &(&self.den * &rhs.num)))
    }

    /// `μ ↦ μ⁻¹`.
    pub fn invert_variable(&self) -> Self {
        canonical(&self.num.invert_variable(), &self.den.invert_variable())
    }

    /// Formats in `λ` when possible, otherwise in `μ`.
    pub fn to_natural_string(&self) -> String {
        let (num, den, var) = if self.has_even_support() {
            (self.num.halve_exponents(), self.den.halve_exponents(), "lambda")
        } else {
            (self.num.clone(), self.den.clone(), "mu")
        };
        if den.as_constant().is_some() {
            format!("{}", num.display_in(var))
        } else {
            format!("({})/({})", num.display_in(var), den.display_in(var))
        }
    }
}

/// Sums `Σ a_k / b_k` over a shared denominator, canonicalizing once.
///
/// Builds the least common multiple of the denominators incrementally, which
/// keeps degrees far lower than the naive product for fixed-point sums whose
/// denominators share cyclotomic factors.
pub fn sum_fractions<'a, I>(terms: I) -> Result<RationalFunc>
where
    I: IntoIterator<Item = (LaurentPoly, &'a RationalFunc)>,
{
    // terms are (extra numerator factor, fraction); both denominators are
    // canonical, i.e. ordinary polynomials
    let terms: alloc::vec::Vec<_> = terms.into_iter().collect();
    let mut lcm: alloc::vec::Vec<Scalar> = alloc::vec![Scalar::one()];
    for (_, f) in &terms {
        let (_, d) = f.den.to_dense();
        let g = dense::gcd(&lcm, &d);
        let (cofactor, _) = dense::div_rem(&d, &g);
        lcm = dense::mul(&lcm, &cofactor);
    }
    let mut num = LaurentPoly::zero();
    for (extra, f) in &terms {
        let (_, d) = f.den.to_dense();
        let (cofactor, rem) = dense::div_rem(&lcm, &d);
        debug_assert!(rem.is_empty());
        let cof = LaurentPoly::from_dense(0, &cofactor);
        num = &num + &(&(extra * &f.num) * &cof);
    }
    RationalFunc::new(num, LaurentPoly::from_dense(0, &lcm))
}

fn canonical(num: &LaurentPoly, den: &LaurentPoly) -> RationalFunc {
    if num.is_zero() {
        return RationalFunc::zero();
    }
    // num = μ^a N, den = μ^b D with N(0), D(0) nonzero
    let (a, n) = num.to_dense();
    let (b, d) = den.to_dense();
    let g = dense::gcd(&n, &d);
    let (mut n, _) = dense::div_rem(&n, &g);
    let (mut d, _) = dense::div_rem(&d, &g);
    let lead = d.last().cloned().expect("nonzero denominator");
    if !lead.is_one() {
        for c in n.iter_mut() {
            *c = &*c / &lead;
        }
        dense::make_monic(&mut d);
    }
    let shift = a - b;
    let (ns, ds) = if shift >= 0 { (shift, 0) } else { (0, -shift) };
    RationalFunc { num: LaurentPoly::from_dense(ns, &n), den: LaurentPoly::from_dense(ds, &d) }
}

impl fmt::Display for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunc({self})")
    }
}

impl Add<&RationalFunc> for &RationalFunc {
    type Output = RationalFunc;
    fn add(self, rhs: &RationalFunc) -> RationalFunc {
        if self.den == rhs.den {
            return canonical(&(&self.num + &rhs.num), &self.den);
        }
        canonical(
            &(&(&self.num * &rhs.den) + &(&rhs.num * &self.den)),
            &(&self.den * &rhs.den),
        )
    }
}

impl Sub<&RationalFunc> for &RationalFunc {
    type Output = RationalFunc;
    fn sub(self, rhs: &RationalFunc) -> RationalFunc {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunc> for &RationalFunc {
    type Output = RationalFunc;
    fn mul(self, rhs: &RationalFunc) -> RationalFunc {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunc::zero();
        }
        canonical(&(&self.num * &rhs.num), &(&self.den * &rhs.den))
    }
}

impl Neg for &RationalFunc {
    type Output = RationalFunc;
    fn neg(self) -> RationalFunc {
        RationalFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RationalFunc {
    type Output = RationalFunc;
    fn add(self, rhs: RationalFunc) -> RationalFunc {
        &self + &rhs
    }
}

impl Sub for RationalFunc {
    type Output = RationalFunc;
    fn sub(self, rhs: RationalFunc) -> RationalFunc {
        &self - &rhs
    }
}

impl Mul for RationalFunc {
    type Output = RationalFunc;
    fn mul(self, rhs: RationalFunc) -> RationalFunc {
        &self * &rhs
    }
}

impl Neg for RationalFunc {
    type Output = RationalFunc;
    fn neg(self) -> RationalFunc {
        -&self
    }
}

impl Ring for RationalFunc {
    fn ring_zero() -> Self {
        RationalFunc::zero()
    }
    fn ring_one() -> Self {
        RationalFunc::one()
    }
    fn is_ring_zero(&self) -> bool {
        RationalFunc::is_zero(self)
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
        RationalFunc::constant(c.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use alloc::string::ToString;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn cancels_common_factor() {
        let r = RationalFunc::new(lp(&[(4, 1), (0, -1)]), lp(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(r, RationalFunc::from_laurent(lp(&[(2, 1), (0, 1)])));
        assert_eq!(r.denominator(), &LaurentPoly::one());
    }

    #[test]
    fn identity_quotient() {
        let r = RationalFunc::new(lp(&[(2, 1), (0, -1)]), lp(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(r, RationalFunc::one());
    }

    #[test]
    fn negative_powers_move_to_denominator() {
        let r = RationalFunc::new(lp(&[(-1, 1)]), LaurentPoly::one()).unwrap();
        assert_eq!(r.numerator(), &LaurentPoly::one());
        assert_eq!(r.denominator(), &lp(&[(1, 1)]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RationalFunc::new(LaurentPoly::one(), LaurentPoly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn constancy_detects_scalar_multiple() {
        let r = RationalFunc::new(lp(&[(2, 2), (0, -2)]), lp(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(r.constancy(), Constancy::Constant(int(2)));
        let s = RationalFunc::new(lp(&[(2, 1)]), lp(&[(2, 1), (0, -1)])).unwrap();
        assert!(matches!(s.constancy(), Constancy::NotConstant(_)));
    }

    #[test]
    fn denominators_are_monic() {
        let r = RationalFunc::new(lp(&[(0, 3)]), lp(&[(2, 6), (0, 2)])).unwrap();
        assert_eq!(r.numerator(), &LaurentPoly::constant(ratio(1, 2)));
        assert_eq!(r.denominator(), &LaurentPoly::from_terms([(2, int(1)), (0, ratio(1, 3))]));
    }

    #[test]
    fn natural_display() {
        let r = RationalFunc::new(lp(&[(2, 1)]), lp(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(r.to_natural_string(), "(lambda)/(lambda - 1)");
        let s = RationalFunc::new(lp(&[(1, 1)]), lp(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(s.to_natural_string(), "(mu)/(mu^2 - 1)");
        assert_eq!(s.to_string(), "(mu)/(mu^2 - 1)");
    }

    #[test]
    fn sum_over_common_denominator() {
        let a = RationalFunc::new(lp(&[(0, 1)]), lp(&[(2, 1), (0, -1)])).unwrap();
        let b = RationalFunc::new(lp(&[(0, 1)]), lp(&[(2, -1), (0, 1)])).unwrap();
        let s = sum_fractions([(LaurentPoly::one(), &a), (LaurentPoly::one(), &b)]).unwrap();
        assert!(s.is_zero());
        let t = sum_fractions([(lp(&[(1, 1)]), &a), (LaurentPoly::one(), &a)]).unwrap();
        assert_eq!(t, &(&a * &RationalFunc::from_laurent(lp(&[(1, 1)]))) + &a);
    }
}
