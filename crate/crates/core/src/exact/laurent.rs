use super::{write_term, Ring, Scalar};
use crate::{Error, Result};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_traits::{One, Zero};

/// Laurent polynomial in the half-character variable `μ`, with finite
/// support and no stored zero coefficients.
///
/// The circle character `t^m` (equivalently `λ^m`) is `μ^{2m}`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · μ^exp`.
    pub fn monomial(c: Scalar, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// The character `t^m = μ^{2m}`.
    pub fn character(m: i64) -> Self {
        Self::monomial(Scalar::one(), 2 * m)
    }

    /// Builds from `(exponent of μ, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, Scalar)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    /// Builds from `(exponent of t, coefficient)` pairs, `t = μ²`.
    pub fn from_t_terms<I: IntoIterator<Item = (i64, Scalar)>>(terms: I) -> Self {
        Self::from_terms(terms.into_iter().map(|(e, c)| (2 * e, c)))
    }

    pub fn add_term(&mut self, exp: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: i64) -> Scalar {
        self.terms.get(&exp).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Scalar)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Returns the constant if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// True when every exponent of `μ` is even, i.e. the element is a
    /// genuine Laurent polynomial in `λ`.
    pub fn has_even_support(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// Multiplies by `μ^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// The substitution `μ ↦ μ⁻¹`.
    pub fn invert_variable(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Invariance under `μ ↦ μ⁻¹`.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| self.terms.get(&-e) == Some(c))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluation at `μ = x`. Fails at `x = 0` when negative powers occur.
    pub fn eval(&self, x: &Scalar) -> Result<Scalar> {
        if x.is_zero() {
            if self.min_exp().is_some_and(|e| e < 0) {
                return Err(Error::Pole);
            }
            return Ok(self.coefficient(0));
        }
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            acc += c * pow_scalar(x, *e);
        }
        Ok(acc)
    }

    /// Evaluation at `λ = x`, i.e. `μ^{2k} ↦ x^k`.
    pub fn eval_lambda(&self, x: &Scalar) -> Result<Scalar> {
        if !self.has_even_support() {
            return Err(Error::HalfIntegralPowers);
        }
        self.halve_exponents().eval(x)
    }

    /// Rewrites in the variable `λ = μ²` (`μ^{2k} ↦ λ^k`). Callers must check
    /// [`Self::has_even_support`] first.
    pub fn halve_exponents(&self) -> Self {
        debug_assert!(self.has_even_support());
        Self { terms: self.terms.iter().map(|(e, c)| (e / 2, c.clone())).collect() }
    }

    /// Dense coefficients of `μ^{-min} · self`, together with `min`.
    pub(crate) fn to_dense(&self) -> (i64, Vec<Scalar>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap_or(lo);
        let mut out = alloc::vec![Scalar::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            out[(e - lo) as usize] = c.clone();
        }
        (lo, out)
    }

    pub(crate) fn from_dense(shift: i64, coeffs: &[Scalar]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, c)| (i as i64 + shift, c.clone())))
    }

    /// Formats with the given variable name; exponents are printed as stored.
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        DisplayIn { poly: self, var }
    }

    /// Formats in `λ` when the support is even, otherwise in `μ`.
    pub fn to_natural_string(&self) -> String {
        if self.has_even_support() {
            format!("{}", self.halve_exponents().display_in("lambda"))
        } else {
            format!("{}", self.display_in("mu"))
        }
    }
}

fn pow_scalar(x: &Scalar, e: i64) -> Scalar {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

struct DisplayIn<'a> {
    poly: &'a LaurentPoly,
    var: &'a str,
}

impl fmt::Display for DisplayIn<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.poly.terms.iter().rev().enumerate() {
            let body = match *e {
                0 => String::new(),
                1 => String::from(self.var),
                e => format!("{}^{}", self.var, e),
            };
            write_term(f, c, &body, i == 0)?;
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.display_in("mu"), f)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Ring for LaurentPoly {
    fn ring_zero() -> Self {
        LaurentPoly::zero()
    }
    fn ring_one() -> Self {
        LaurentPoly::one()
    }
    fn is_ring_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
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
        LaurentPoly::constant(c.clone())
    }
}
