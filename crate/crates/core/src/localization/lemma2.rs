use crate::exact::{LaurentPoly, Scalar};
use crate::{Error, Result};
use alloc::format;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Result of comparing two fixed-point tangent characters.
///
/// `difference` is `f = charA - charB`. If `f` is divisible by `(1 - t)³`
/// then `quotient` is `P(t)` with `f = (1 - t)³ P(t)`. All Laurent
/// polynomials here use the `μ` representation (`t = μ²`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma2Report {
    pub difference: LaurentPoly,
    /// `f(t) = f(t⁻¹)`.
    pub symmetric: bool,
    /// Largest `k` with `(1 - t)^k | f`; `None` for `f = 0`.
    pub one_minus_t_order: Option<u32>,
    pub divisible: bool,
    pub quotient: Option<LaurentPoly>,
    pub weight_sum_a: BigInt,
    pub weight_sum_b: BigInt,
    /// `(weight_sum_a - weight_sum_b) mod 2`.
    pub parity_difference: u8,
}

fn check_character(label: &str, ch: &LaurentPoly) -> Result<()> {
    if !ch.has_even_support() {
        return Err(Error::NotACharacter(format!("{label} has a half-integral power of t")));
    }
    if !ch.is_symmetric() {
        return Err(Error::NotACharacter(format!("{label} is not invariant under t -> 1/t")));
    }
    for (e, c) in ch.terms() {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::NotACharacter(format!(
                "{label} has coefficient {c} at t^{}; multiplicities must be non-negative integers",
                e / 2
            )));
        }
    }
    Ok(())
}

/// `Σ_{k>0} k · mult(t^k)`, the sum of the positive weights.
fn weight_sum(ch: &LaurentPoly) -> BigInt {
    ch.terms()
        .filter(|(e, _)| *e > 0)
        .map(|(e, c)| c.to_integer() * BigInt::from(e / 2))
        .sum()
}

/// Synthetic division by `t - 1`; returns the quotient if the remainder is 0.
fn divide_by_t_minus_one(c: &[Scalar]) -> Option<Vec<Scalar>> {
    let d = c.len().checked_sub(1)?;
    if d == 0 {
        return None;
    }
    let mut b = alloc::vec![Scalar::zero(); d];
    b[d - 1] = c[d].clone();
    for k in (1..d).rev() {
        b[k - 1] = &c[k] + &b[k];
    }
    (c[0].clone() + &b[0]).is_zero().then_some(b)
}

/// Checks symmetry and `(1 - t)³`-divisibility of the difference of two real
/// S¹-representation characters, and the parity of their weight sums.
///
/// When the difference is symmetric and divisible, the weight sums must
/// agree mod 2; a violation is reported as [`Error::Lemma2Inconsistent`].
pub fn lemma2_verify(char_a: &LaurentPoly, char_b: &LaurentPoly) -> Result<Lemma2Report> {
    check_character("char-a", char_a)?;
    check_character("char-b", char_b)?;
    let difference = char_a - char_b;
    let symmetric = difference.is_symmetric();

    let in_t = difference.halve_exponents();
    let (lo, mut dense) = in_t.to_dense();
    let (one_minus_t_order, quotient) = if difference.is_zero() {
        (None, Some(LaurentPoly::zero()))
    } else {
        let mut order = 0u32;
        let mut cubic = None;
        while let Some(q) = divide_by_t_minus_one(&dense) {
            dense = q;
            order += 1;
            if order == 3 {
                // (1 - t)³ = -(t - 1)³
                let p = LaurentPoly::from_dense(lo, &dense);
                cubic = Some(LaurentPoly::from_t_terms(p.terms().map(|(e, c)| (e, -c))));
            }
        }
        (Some(order), cubic)
    };
    let divisible = quotient.is_some();

    let weight_sum_a = weight_sum(char_a);
    let weight_sum_b = weight_sum(char_b);
    let parity_difference = if (&weight_sum_a - &weight_sum_b).is_even() { 0 } else { 1 };
    if divisible && symmetric && parity_difference != 0 {
        return Err(Error::Lemma2Inconsistent);
    }
    Ok(Lemma2Report {
        difference,
        symmetric,
        one_minus_t_order,
        divisible,
        quotient,
        weight_sum_a,
        weight_sum_b,
        parity_difference,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn t_poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_t_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn divisible_example() {
        let a = t_poly(&[(0, 2), (2, 3), (-2, 3)]);
        let b = t_poly(&[(1, 3), (-1, 3), (3, 1), (-3, 1)]);
        let r = lemma2_verify(&a, &b).unwrap();
        assert!(r.symmetric && r.divisible);
        // 1 - t^-3 contributes a fourth factor
        assert_eq!(r.one_minus_t_order, Some(4));
        assert_eq!(r.quotient, Some(t_poly(&[(0, 1), (-3, -1)])));
        assert_eq!((r.weight_sum_a.clone(), r.weight_sum_b.clone()), (BigInt::from(6), BigInt::from(6)));
        assert_eq!(r.parity_difference, 0);
    }

    #[test]
    fn only_square_divides() {
        let r = lemma2_verify(&t_poly(&[(1, 1), (-1, 1)]), &t_poly(&[(3, 1), (-3, 1)])).unwrap();
        assert!(r.symmetric);
        assert!(!r.divisible);
        assert_eq!(r.one_minus_t_order, Some(2));
        assert_eq!(r.quotient, None);
    }

    #[test]
    fn equal_characters() {
        let a = t_poly(&[(1, 1), (-1, 1), (0, 4)]);
        let r = lemma2_verify(&a, &a).unwrap();
        assert!(r.divisible && r.symmetric);
        assert_eq!(r.quotient, Some(LaurentPoly::zero()));
        assert_eq!(r.parity_difference, 0);
    }

    #[test]
    fn rejects_non_characters() {
        let asym = t_poly(&[(1, 1)]);
        assert!(matches!(lemma2_verify(&asym, &LaurentPoly::zero()), Err(Error::NotACharacter(_))));
        let neg = t_poly(&[(1, -1), (-1, -1)]);
        assert!(matches!(lemma2_verify(&LaurentPoly::zero(), &neg), Err(Error::NotACharacter(_))));
        let half = LaurentPoly::from_terms([(1, int(1)), (-1, int(1))]);
        assert!(matches!(lemma2_verify(&half, &half), Err(Error::NotACharacter(_))));
    }
}
