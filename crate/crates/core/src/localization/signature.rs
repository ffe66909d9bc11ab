use super::{FixedPoint, S1ManifoldData};
use crate::exact::{int, sum_fractions, LaurentPoly, QSeries, RationalFunc, Scalar};
use crate::rseries::{r_character_series, restrict_character, BundleExpr};
use crate::{Error, Result};
use alloc::vec::Vec;
use num_traits::One;

fn with_point(err: Error, point: usize) -> Error {
    match err {
        Error::ZeroWeight { index, .. } => Error::ZeroWeight { point, index },
        other => other,
    }
}

/// `sign(p) · ∏_j (λ^{m_j} + 1)/(λ^{m_j} - 1)` with `λ = μ²`.
pub fn signature_factor(p: &FixedPoint) -> Result<RationalFunc> {
    let mut num = LaurentPoly::constant(int(p.sign as i64));
    let mut den = LaurentPoly::one();
    for (index, &m) in p.weights.iter().enumerate() {
        if m == 0 {
            return Err(Error::ZeroWeight { point: 0, index });
        }
        let lam = LaurentPoly::character(m);
        num = &num * &(&lam + &LaurentPoly::one());
        den = &den * &(&lam - &LaurentPoly::one());
    }
    RationalFunc::new(num, den)
}

/// `sign(p) · ∏_j 1/(μ^{m_j} - μ^{-m_j})`.
fn a_hat_factor(p: &FixedPoint) -> Result<RationalFunc> {
    let mut den = LaurentPoly::one();
    for (index, &m) in p.weights.iter().enumerate() {
        if m == 0 {
            return Err(Error::ZeroWeight { point: 0, index });
        }
        let diff = &LaurentPoly::monomial(Scalar::one(), m) - &LaurentPoly::monomial(Scalar::one(), -m);
        den = &den * &diff;
    }
    RationalFunc::new(LaurentPoly::constant(int(p.sign as i64)), den)
}

fn factors<F>(m: &S1ManifoldData, f: F) -> Result<Vec<RationalFunc>>
where
    F: Fn(&FixedPoint) -> Result<RationalFunc>,
{
    m.fixed_points()
        .iter()
        .enumerate()
        .map(|(i, p)| f(p).map_err(|e| with_point(e, i)))
        .collect()
}

/// Equivariant index of the signature operator twisted by `W`, as a
/// rational function of `μ` in canonical form.
pub fn equivariant_twisted_signature(m: &S1ManifoldData, w: &BundleExpr) -> Result<RationalFunc> {
    let fs = factors(m, signature_factor)?;
    let chars: Vec<LaurentPoly> = m
        .fixed_points()
        .iter()
        .enumerate()
        .map(|(i, p)| restrict_character(w, &p.weights).map_err(|e| with_point(e, i)))
        .collect::<Result<_>>()?;
    sum_fractions(chars.into_iter().zip(fs.iter()))
}

/// `Φ(X)_{S¹} = Σ_i sign(X, R_i)_{S¹} q^i` through `q^order`.
pub fn equivariant_elliptic_genus(m: &S1ManifoldData, order: usize) -> Result<QSeries<RationalFunc>> {
    let fs = factors(m, signature_factor)?;
    let series: Vec<QSeries<LaurentPoly>> = m
        .fixed_points()
        .iter()
        .enumerate()
        .map(|(i, p)| r_character_series(&p.weights, order).map_err(|e| with_point(e, i)))
        .collect::<Result<_>>()?;
    let coeffs = (0..=order)
        .map(|k| sum_fractions(series.iter().map(|s| s.coeff(k).clone()).zip(fs.iter())))
        .collect::<Result<Vec<_>>>()?;
    Ok(QSeries::new(coeffs, order))
}

/// Fixed-point sum of the Â-genus, `Σ_p sign(p) ∏_j 1/(μ^{m_j} - μ^{-m_j})`.
/// May contain odd powers of `μ`.
pub fn equivariant_a_hat(m: &S1ManifoldData) -> Result<RationalFunc> {
    let fs = factors(m, a_hat_factor)?;
    sum_fractions(fs.iter().map(|f| (LaurentPoly::one(), f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, Constancy};
    use alloc::vec;

    fn manifold(dim: u32, pts: &[&[i64]]) -> S1ManifoldData {
        S1ManifoldData::new("m", dim, pts.iter().map(|w| FixedPoint::new(w.to_vec())).collect(), None)
            .unwrap()
    }

    fn cp2() -> S1ManifoldData {
        manifold(4, &[&[1, 2], &[-1, 1], &[-2, -1]])
    }

    #[test]
    fn sphere_signature_vanishes() {
        let s2 = manifold(2, &[&[1], &[-1]]);
        assert!(equivariant_twisted_signature(&s2, &BundleExpr::trivial()).unwrap().is_zero());
        assert!(equivariant_a_hat(&s2).unwrap().is_zero());
    }

    #[test]
    fn cp2_signature_terms() {
        let terms: Vec<Scalar> = cp2()
            .fixed_points()
            .iter()
            .map(|p| signature_factor(p).unwrap().eval_lambda(&int(2)).unwrap())
            .collect();
        assert_eq!(terms, vec![int(5), int(-9), int(5)]);
        let sig = equivariant_twisted_signature(&cp2(), &BundleExpr::trivial()).unwrap();
        assert_eq!(sig.constancy(), Constancy::Constant(int(1)));
    }

    #[test]
    fn cp2_twisted_by_two_t() {
        let r = equivariant_twisted_signature(&cp2(), &BundleExpr::tangent().scale(2)).unwrap();
        assert_eq!(r.eval_lambda(&int(2)).unwrap(), int(45));
        assert_eq!(r.eval_lambda(&int(3)).unwrap(), ratio(640, 9));
        assert!(r.is_laurent());
        // restriction to the identity element is the plain twisted signature
        assert_eq!(r.eval(&int(1)).unwrap(), int(32));
    }

    #[test]
    fn cp2_a_hat() {
        let a = equivariant_a_hat(&cp2()).unwrap();
        assert_eq!(a.eval(&int(2)).unwrap(), ratio(-4, 45));
        assert!(a.vanishes_at_infinity());
    }

    #[test]
    fn elliptic_genus_agrees_with_twisted_signature() {
        let phi = equivariant_elliptic_genus(&cp2(), 2).unwrap();
        let r = crate::rseries::expand_r(2);
        for (i, ri) in r.iter().enumerate() {
            assert_eq!(phi.coeff(i), &equivariant_twisted_signature(&cp2(), ri).unwrap());
        }
    }

    #[test]
    fn zero_weight_rejected() {
        assert_eq!(
            signature_factor(&FixedPoint::new(vec![0])),
            Err(Error::ZeroWeight { point: 0, index: 0 })
        );
    }
}
