use super::{LaurentPoly, Ring, Scalar};
use crate::{Error, Result};
use alloc::vec::Vec;
use core::fmt;

/// Power series in `q` truncated after `q^order`.
///
/// Every operation between series of different orders truncates at the
/// smaller one.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> QSeries<C> {
    /// Pads with zeros or truncates so the series has exactly `order + 1`
    /// coefficients.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::ring_zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::ring_one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::new(alloc::vec![c], order)
    }

    /// `c · q^k`, zero if `k > order`.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_ring_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self {
            coeffs: (0..=order).map(|i| self.coeffs[i].add_ref(&rhs.coeffs[i])).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self {
            coeffs: (0..=order).map(|i| self.coeffs[i].sub_ref(&rhs.coeffs[i])).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(C::neg_ref).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out: Vec<C> = (0..=order).map(|_| C::ring_zero()).collect();
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_ring_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_ring_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Self { coeffs: out }
    }

    /// Coefficient-wise multiplication by a ring element.
    pub fn scale(&self, c: &C) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect() }
    }

    pub fn map<D: Ring, F: FnMut(&C) -> D>(&self, f: F) -> QSeries<D> {
        QSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Product of a sequence of series, starting from `1 + O(q^{order+1})`.
    pub fn product<'a, I>(factors: I, order: usize) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
        C: 'a,
    {
        factors.into_iter().fold(Self::one(order), |acc, f| acc.mul(f))
    }
}

impl QSeries<Scalar> {
    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if Ring::is_ring_zero(c0) {
            return Err(Error::NonInvertibleSeries);
        }
        let inv0 = c0.recip();
        let mut out = alloc::vec![inv0.clone()];
        for k in 1..=self.order() {
            let mut acc = Scalar::from_integer(0.into());
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out.push(-acc * &inv0);
        }
        Ok(Self { coeffs: out })
    }
}

impl<C: fmt::Debug> fmt::Debug for QSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

/// The factor `(1 + sign · q^q_power · μ^mu_power)^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeometricFactor {
    /// `+1` or `-1`.
    pub sign: i8,
    pub q_power: u32,
    pub mu_power: i64,
    pub inverted: bool,
}

impl GeometricFactor {
    /// `1 + s q^a μ^b`.
    pub fn plain(sign: i8, q_power: u32, mu_power: i64) -> Self {
        Self { sign, q_power, mu_power, inverted: false }
    }

    /// `(1 + s q^a μ^b)^{-1}`.
    pub fn inverse(sign: i8, q_power: u32, mu_power: i64) -> Self {
        Self { sign, q_power, mu_power, inverted: true }
    }
}

/// Expands one factor as a q-series with Laurent coefficients, truncated at
/// `q^order`. Inverse factors use the geometric series and need a positive
/// power of `q`.
pub fn expand_geometric(factor: GeometricFactor, order: usize) -> Result<QSeries<LaurentPoly>> {
    let sign = Scalar::from_integer(if factor.sign < 0 { (-1).into() } else { 1.into() });
    let a = factor.q_power as usize;
    if !factor.inverted {
        let mut s = QSeries::zero(order);
        s.coeffs[0] = LaurentPoly::one();
        if a <= order {
            let term = LaurentPoly::monomial(sign, factor.mu_power);
            s.coeffs[a] = &s.coeffs[a] + &term;
        }
        return Ok(s);
    }
    if a == 0 {
        return Err(Error::NonInvertibleSeries);
    }
    // Σ_k (-s q^a μ^b)^k
    let ratio = -sign;
    let mut s = QSeries::zero(order);
    let mut c = Scalar::from_integer(1.into());
    let mut k = 0usize;
    while k * a <= order {
        s.coeffs[k * a] = LaurentPoly::monomial(c.clone(), factor.mu_power * k as i64);
        c *= &ratio;
        k += 1;
    }
    Ok(s)
}
