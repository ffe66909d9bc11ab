//! Built-in example manifolds with linear circle actions.

use ellgenus_core::genus::{Partition, PontryaginData};
use ellgenus_core::localization::{product_manifold, FixedPoint, S1ManifoldData};
use ellgenus_core::Scalar;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("parameters must be pairwise distinct, {0} repeats (fixed points would not be isolated)")]
    Repeated(i64),
    #[error("need at least one parameter")]
    Empty,
    #[error("unknown catalog entry {0:?}")]
    Unknown(String),
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Pontryagin numbers of `CP^n`: `p(CP^n) = (1 + h²)^{n+1}` and `h^n = 1`,
/// so `p_I[CP^n] = ∏_k C(n+1, i_k)` when `n` is even.
pub fn cpn_pontryagin(n: u32) -> PontryaginData {
    let dim = 2 * n;
    let mut numbers = BTreeMap::new();
    if dim.is_multiple_of(4) {
        for part in Partition::all_of(dim / 4) {
            let v: u64 = part.parts().iter().map(|&i| binomial(n as u64 + 1, i as u64)).product();
            numbers.insert(part, Scalar::from_integer(v.into()));
        }
    }
    PontryaginData::new(format!("CP{n}"), dim, numbers).expect("weights match dimension")
}

/// `CP^n` with `λ · [z_0 : … : z_n] = [λ^{a_0} z_0 : … : λ^{a_n} z_n]`.
///
/// Fixed point `P_i` has weights `a_j - a_i` for `j ≠ i`, sign `+1`.
pub fn catalog_cpn(a: &[i64]) -> Result<S1ManifoldData, CatalogError> {
    if a.is_empty() {
        return Err(CatalogError::Empty);
    }
    let mut seen = BTreeSet::new();
    for &x in a {
        if !seen.insert(x) {
            return Err(CatalogError::Repeated(x));
        }
    }
    let n = (a.len() - 1) as u32;
    let points = (0..a.len())
        .map(|i| FixedPoint::new((0..a.len()).filter(|&j| j != i).map(|j| a[j] - a[i]).collect()))
        .collect();
    let params: Vec<String> = a.iter().map(i64::to_string).collect();
    let name = format!("CP{n}[{}]", params.join(","));
    Ok(S1ManifoldData::new(name, 2 * n, points, Some(cpn_pontryagin(n))).expect("distinct parameters"))
}

/// Names accepted by [`builtin`].
pub const NAMES: &[&str] =
    &["point", "s2", "cp2_12", "cp2_24", "cp3_0123", "s2xs2", "cp2xs2", "cp4_01234"];

pub fn builtin(name: &str) -> Result<S1ManifoldData, CatalogError> {
    let cp = |a: &[i64]| catalog_cpn(a).expect("catalog parameters are distinct");
    Ok(match name {
        "point" => S1ManifoldData::point(),
        "s2" => cp(&[0, 1]).with_name("S2"),
        "cp2_12" => cp(&[0, 1, 2]),
        "cp2_24" => cp(&[0, 2, 4]),
        "cp3_0123" => cp(&[0, 1, 2, 3]),
        "s2xs2" => {
            let s2 = cp(&[0, 1]).with_name("S2");
            product_manifold(&s2, &s2)
        }
        "cp2xs2" => product_manifold(&cp(&[0, 1, 2]), &cp(&[0, 1]).with_name("S2")),
        "cp4_01234" => cp(&[0, 1, 2, 3, 4]),
        other => return Err(CatalogError::Unknown(other.to_string())),
    })
}

pub fn all() -> Vec<(&'static str, S1ManifoldData)> {
    NAMES.iter().map(|n| (*n, builtin(n).expect("listed"))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_data() {
        let s2 = catalog_cpn(&[0, 1]).unwrap();
        let w: Vec<_> = s2.fixed_points().iter().map(|p| p.weights.clone()).collect();
        assert_eq!(w, vec![vec![1], vec![-1]]);
    }

    #[test]
    fn cp2_data() {
        let cp2 = catalog_cpn(&[0, 1, 2]).unwrap();
        let w: Vec<_> = cp2.fixed_points().iter().map(|p| p.weights.clone()).collect();
        assert_eq!(w, vec![vec![1, 2], vec![-1, 1], vec![-2, -1]]);
        assert_eq!(cp2.pontryagin().unwrap().number(&Partition::new(vec![1])), Scalar::from_integer(3.into()));
    }

    #[test]
    fn cp4_numbers() {
        let p = cpn_pontryagin(4);
        assert_eq!(p.number(&Partition::new(vec![1, 1])), Scalar::from_integer(25.into()));
        assert_eq!(p.number(&Partition::new(vec![2])), Scalar::from_integer(10.into()));
    }

    #[test]
    fn repeated_parameters() {
        assert_eq!(catalog_cpn(&[0, 1, 1]).unwrap_err(), CatalogError::Repeated(1));
        assert_eq!(catalog_cpn(&[]).unwrap_err(), CatalogError::Empty);
    }
}
