use super::{PPoly, Partition};
use crate::exact::{int, QSeries, Ring, Scalar};
use crate::{Error, Result};
use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Zero};

/// Homogeneous polynomial `K_n(p₁, …, p_n)` of weight `n` from a
/// multiplicative sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusPolynomial {
    pub degree: u32,
    pub poly: PPoly,
}

impl GenusPolynomial {
    pub fn coefficient(&self, m: &Partition) -> Scalar {
        self.poly.coefficient(m)
    }
}

impl fmt::Display for GenusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

fn factorial(n: usize) -> Scalar {
    (1..=n as i64).fold(Scalar::one(), |acc, k| acc * int(k))
}

/// Coefficients of `x / sinh x` up to `x^order`.
fn x_over_sinh(order: usize) -> QSeries<Scalar> {
    // sinh(x)/x = Σ x^{2k}/(2k+1)!
    let coeffs = (0..=order)
        .map(|i| if i % 2 == 0 { factorial(i + 1).recip() } else { Scalar::zero() })
        .collect();
    QSeries::new(coeffs, order).inverse().expect("constant term is 1")
}

fn cosh(order: usize) -> QSeries<Scalar> {
    let coeffs = (0..=order)
        .map(|i| if i % 2 == 0 { factorial(i).recip() } else { Scalar::zero() })
        .collect();
    QSeries::new(coeffs, order)
}

/// Substitutes `x ↦ x / 2`.
fn halve_argument(s: &QSeries<Scalar>) -> Vec<Scalar> {
    let mut scale = Scalar::one();
    let half = Scalar::new(1.into(), 2.into());
    s.coeffs()
        .iter()
        .map(|c| {
            let out = c * &scale;
            scale *= &half;
            out
        })
        .collect()
}

/// `(x/2) / sinh(x/2)` up to `x^order`, the series of the Â-genus.
pub fn a_hat_series(order: usize) -> Vec<Scalar> {
    halve_argument(&x_over_sinh(order))
}

/// `x / tanh x` up to `x^order`, the series of the L-genus.
pub fn l_series(order: usize) -> Vec<Scalar> {
    cosh(order).mul(&x_over_sinh(order)).into_coeffs()
}

/// `(x/2) / tanh(x/2)` up to `x^order`.
pub fn half_coth_series(order: usize) -> Vec<Scalar> {
    halve_argument(&QSeries::new(l_series(order), order))
}

/// Power sums `s_k = Σ z_j^k` of the squared roots `z_j = x_j²`, written in
/// the elementary symmetric functions `p_i = e_i(z)` by Newton's identities.
/// Entry `k` holds `s_k`; entry 0 is unused (zero).
pub fn power_sums(max: u32) -> Vec<PPoly> {
    let mut s: Vec<PPoly> = alloc::vec![PPoly::zero()];
    for k in 1..=max {
        // s_k = Σ_{i<k} (-1)^{i-1} p_i s_{k-i} + (-1)^{k-1} k p_k
        let mut acc = PPoly::zero();
        for i in 1..k {
            let term = PPoly::p(i).mul_ref(&s[(k - i) as usize]);
            acc = if i % 2 == 1 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
        }
        let last = PPoly::p(k).scale(&int(k as i64));
        acc = if k % 2 == 1 { acc.add_ref(&last) } else { acc.sub_ref(&last) };
        s.push(acc);
    }
    s
}

/// All components `K_0, …, K_n` of the multiplicative sequence of an even
/// series `Q(x)` with `Q(0) = 1`, as a series graded by weight.
///
/// Writes `Q(x) = f(x²)`, takes `log f(z) = Σ c_k z^k`, so that
/// `Σ_j log f(z_j) = Σ_k c_k s_k`, and exponentiates in the graded ring.
pub fn multiplicative_sequence_graded(q: &[Scalar], n: u32) -> Result<QSeries<PPoly>> {
    let n_us = n as usize;
    let needed = 2 * n_us + 1;
    if q.len() < needed {
        return Err(Error::InsufficientOrder { needed, given: q.len() });
    }
    if !q[0].is_one() {
        return Err(Error::SeriesNotNormalized);
    }
    if let Some(power) = (1..needed).step_by(2).find(|&i| !q[i].is_zero()) {
        return Err(Error::SeriesNotEven { power });
    }
    let a: Vec<Scalar> = (0..=n_us).map(|k| q[2 * k].clone()).collect();

    // k c_k = k a_k - Σ_{j<k} j c_j a_{k-j}
    let mut c: Vec<Scalar> = alloc::vec![Scalar::zero(); n_us + 1];
    for k in 1..=n_us {
        let mut acc = int(k as i64) * &a[k];
        for j in 1..k {
            acc -= int(j as i64) * &c[j] * &a[k - j];
        }
        c[k] = acc / int(k as i64);
    }

    let s = power_sums(n);
    let log_terms: Vec<PPoly> = (0..=n_us)
        .map(|k| if k == 0 { PPoly::zero() } else { s[k].scale(&c[k]) })
        .collect();

    // E_k = (1/k) Σ_{j=1}^k j G_j E_{k-j}
    let mut e: Vec<PPoly> = alloc::vec![PPoly::one()];
    for k in 1..=n_us {
        let mut acc = PPoly::zero();
        for j in 1..=k {
            acc = acc.add_ref(&log_terms[j].mul_ref(&e[k - j]).scale(&int(j as i64)));
        }
        e.push(acc.scale(&int(k as i64).recip()));
    }
    Ok(QSeries::new(e, n_us))
}

/// The weight-`n` polynomial `K_n` of the multiplicative sequence of `q`.
///
/// `q` lists the coefficients of `Q(x)` in `x` and must reach `x^{2n}`.
pub fn multiplicative_sequence(q: &[Scalar], n: u32) -> Result<GenusPolynomial> {
    let graded = multiplicative_sequence_graded(q, n)?;
    Ok(GenusPolynomial { degree: n, poly: graded.coeff(n as usize).clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use alloc::vec;

    #[test]
    fn series_coefficients() {
        // x/tanh x = 1 + x²/3 - x⁴/45 + ...
        assert_eq!(l_series(4), vec![int(1), int(0), ratio(1, 3), int(0), ratio(-1, 45)]);
        // (x/2)/sinh(x/2) = 1 - x²/24 + 7x⁴/5760 - ...
        assert_eq!(a_hat_series(4), vec![int(1), int(0), ratio(-1, 24), int(0), ratio(7, 5760)]);
        assert_eq!(half_coth_series(2), vec![int(1), int(0), ratio(1, 12)]);
    }

    #[test]
    fn degree_zero_is_one() {
        let k = multiplicative_sequence(&a_hat_series(0), 0).unwrap();
        assert_eq!(k.poly, PPoly::one());
    }

    #[test]
    fn newton_power_sums() {
        let s = power_sums(3);
        // s_2 = p1² - 2 p2
        let expected = PPoly::p(1).mul_ref(&PPoly::p(1)).sub_ref(&PPoly::p(2).scale(&int(2)));
        assert_eq!(s[2], expected);
    }

    #[test]
    fn rejects_bad_series() {
        assert_eq!(
            multiplicative_sequence(&[int(1), int(0)], 1),
            Err(Error::InsufficientOrder { needed: 3, given: 2 })
        );
        assert_eq!(multiplicative_sequence(&[int(2), int(0), int(1)], 1), Err(Error::SeriesNotNormalized));
        assert_eq!(
            multiplicative_sequence(&[int(1), int(1), int(1)], 1),
            Err(Error::SeriesNotEven { power: 1 })
        );
    }

    #[test]
    fn graded_output_is_homogeneous() {
        let g = multiplicative_sequence_graded(&l_series(8), 4).unwrap();
        for (k, part) in g.coeffs().iter().enumerate() {
            assert_eq!(part.homogeneous_weight(), Some(k as u32));
        }
    }
}
