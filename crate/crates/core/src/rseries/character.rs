use super::{Atom, BundleExpr};
use crate::exact::{expand_geometric, GeometricFactor, LaurentPoly, QSeries, Scalar};
use crate::{Error, Result};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// Exponents of `μ` in the character of `T_p ⊗ C = Σ_j (t^{m_j} + t^{-m_j})`.
pub fn tangent_roots(weights: &[i64]) -> Result<Vec<i64>> {
    let mut roots = Vec::with_capacity(2 * weights.len());
    for (index, &m) in weights.iter().enumerate() {
        if m == 0 {
            return Err(Error::ZeroWeight { point: 0, index });
        }
        roots.push(2 * m);
        roots.push(-2 * m);
    }
    Ok(roots)
}

/// Characters of `Λ^k T` (`exterior = true`) or `Sym^k T` for `k ≤ max`,
/// read off `∏(1 + s μ^e)` and `∏(1 - s μ^e)^{-1}`.
fn graded_characters(roots: &[i64], max: usize, exterior: bool) -> Vec<LaurentPoly> {
    let mut acc: QSeries<LaurentPoly> = QSeries::one(max);
    for &e in roots {
        let factor = if exterior {
            GeometricFactor::plain(1, 1, e)
        } else {
            GeometricFactor::inverse(-1, 1, e)
        };
        acc = acc.mul(&expand_geometric(factor, max).expect("q-power is 1"));
    }
    acc.into_coeffs()
}

/// Character of a bundle expression at a fixed point with the given weights.
pub fn restrict_character(w: &BundleExpr, weights: &[i64]) -> Result<LaurentPoly> {
    let roots = tangent_roots(weights)?;
    let max = w.max_atom_degree() as usize;
    let lambdas = graded_characters(&roots, max, true);
    let syms = graded_characters(&roots, max, false);
    let mut cache: BTreeMap<Atom, LaurentPoly> = BTreeMap::new();
    let mut out = LaurentPoly::zero();
    for (m, c) in w.terms() {
        let mut value = LaurentPoly::constant(Scalar::from_integer(c.into()));
        for atom in m.atoms() {
            let ch = cache.entry(*atom).or_insert_with(|| match atom {
                Atom::T => lambdas[1].clone(),
                Atom::Lambda(b) => lambdas[*b as usize].clone(),
                Atom::Sym(a) => syms[*a as usize].clone(),
            });
            value = &value * ch;
        }
        out = &out + &value;
    }
    Ok(out)
}

/// `Σ_i χ(R_i) q^i` at a fixed point, computed directly as
/// `∏_{i≥1} ∏_e (1 + q^i μ^e)(1 - q^i μ^e)^{-1}` over the tangent roots `e`.
pub fn r_character_series(weights: &[i64], order: usize) -> Result<QSeries<LaurentPoly>> {
    let roots = tangent_roots(weights)?;
    let mut acc: QSeries<LaurentPoly> = QSeries::one(order);
    for i in 1..=order {
        let q_power = u32::try_from(i).expect("small order");
        for &e in &roots {
            acc = acc.mul(&expand_geometric(GeometricFactor::plain(1, q_power, e), order)?);
            acc = acc.mul(&expand_geometric(GeometricFactor::inverse(-1, q_power, e), order)?);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Ring};
    use crate::rseries::expand_r;

    fn sym(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn tangent_character() {
        let ch = restrict_character(&BundleExpr::tangent(), &[1, 2]).unwrap();
        assert_eq!(ch, sym(&[(2, 1), (-2, 1), (4, 1), (-4, 1)]));
        let two_t = restrict_character(&BundleExpr::tangent().scale(2), &[1]).unwrap();
        assert_eq!(two_t, sym(&[(2, 2), (-2, 2)]));
    }

    #[test]
    fn tensor_square_identity() {
        let sq = BundleExpr::atom(Atom::Sym(2)).add_ref(&BundleExpr::atom(Atom::Lambda(2)));
        let t = restrict_character(&BundleExpr::tangent(), &[3, -1, 2]).unwrap();
        assert_eq!(restrict_character(&sq, &[3, -1, 2]).unwrap(), &t * &t);
    }

    #[test]
    fn direct_series_low_order() {
        let s = r_character_series(&[1], 1).unwrap();
        assert_eq!(s.coeff(0), &LaurentPoly::one());
        assert_eq!(s.coeff(1), &sym(&[(2, 2), (-2, 2)]));
        assert_eq!(r_character_series(&[3, 4], 0).unwrap().coeffs(), &[LaurentPoly::one()]);
    }

    #[test]
    fn pipelines_agree_on_cp2_weights() {
        let direct = r_character_series(&[1, 2], 2).unwrap();
        let r = expand_r(2);
        assert_eq!(&restrict_character(&r[2], &[1, 2]).unwrap(), direct.coeff(2));
    }

    #[test]
    fn zero_weight_rejected() {
        assert!(matches!(restrict_character(&BundleExpr::tangent(), &[1, 0]), Err(Error::ZeroWeight { .. })));
        assert!(r_character_series(&[0], 1).is_err());
    }
}
