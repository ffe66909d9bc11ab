use super::{equivariant_elliptic_genus, BalanceReport, S1ManifoldData};
use crate::exact::{int, Constancy, RationalFunc, Scalar};
use crate::genus::twisted_signature;
use crate::rseries::expand_r;
use crate::Result;
use alloc::vec::Vec;

/// Verdict for one q-coefficient of the equivariant elliptic genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeVerdict {
    pub degree: usize,
    /// Canonical coefficient `sign(X, R_i)_{S¹}`.
    pub value: RationalFunc,
    pub constancy: Constancy,
    /// Two evaluations that differ, present iff the coefficient is not
    /// constant. Points are values of `λ` when `in_lambda`, else of `μ`.
    pub witness: Option<[(Scalar, Scalar); 2]>,
    pub in_lambda: bool,
    /// Value at the identity element `λ = 1`, when it is not a pole.
    pub at_identity: Option<Scalar>,
    /// `sign(X, R_i)` from Pontryagin numbers, when those are attached.
    pub from_pontryagin: Option<Scalar>,
}

impl DegreeVerdict {
    pub fn is_constant(&self) -> bool {
        matches!(self.constancy, Constancy::Constant(_))
    }

    /// Whether the fixed-point side agrees with the Pontryagin side at
    /// `λ = 1`. `None` when either value is unavailable.
    pub fn cross_check(&self) -> Option<bool> {
        Some(self.at_identity.as_ref()? == self.from_pontryagin.as_ref()?)
    }
}

/// Constancy in `λ` of each coefficient of `Φ(X)_{S¹}` through some order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityVerdict {
    pub degrees: Vec<DegreeVerdict>,
    /// Highest `k` with coefficients `0..=k` all constant.
    pub rigid_through: Option<usize>,
}

impl RigidityVerdict {
    pub fn is_rigid(&self) -> bool {
        self.degrees.iter().all(DegreeVerdict::is_constant)
    }

    pub fn first_witness(&self) -> Option<&DegreeVerdict> {
        self.degrees.iter().find(|d| !d.is_constant())
    }

    /// False if any available cross-check disagrees.
    pub fn consistent_with_pontryagin(&self) -> bool {
        self.degrees.iter().all(|d| d.cross_check() != Some(false))
    }
}

/// Two sample points where `r` takes different values. Scans 2, 3, 4, …,
/// skipping poles; a non-constant rational function repeats each value only
/// finitely often, so the scan terminates.
fn witness(r: &RationalFunc, in_lambda: bool) -> [(Scalar, Scalar); 2] {
    let eval = |x: &Scalar| if in_lambda { r.eval_lambda(x) } else { r.eval(x) };
    let mut first: Option<(Scalar, Scalar)> = None;
    let mut x = 2i64;
    loop {
        let pt = int(x);
        if let Ok(v) = eval(&pt) {
            match &first {
                None => first = Some((pt, v)),
                Some((_, v0)) if *v0 != v => {
                    return [first.take().expect("set"), (pt, v)];
                }
                Some(_) => {}
            }
        }
        x += 1;
    }
}

/// Evaluates `Φ(X)_{S¹}` through `q^order` and decides constancy of every
/// coefficient. With Pontryagin data attached, each coefficient's value at
/// the identity is compared with the non-equivariant twisted signature.
pub fn check_rigidity(m: &S1ManifoldData, order: usize) -> Result<RigidityVerdict> {
    let phi = equivariant_elliptic_genus(m, order)?;
    let rs = m.pontryagin().map(|_| expand_r(order));
    let mut degrees = Vec::with_capacity(order + 1);
    for (degree, value) in phi.coeffs().iter().enumerate() {
        let constancy = value.constancy();
        let in_lambda = value.has_even_support();
        let witness = match constancy {
            Constancy::Constant(_) => None,
            Constancy::NotConstant(_) => Some(witness(value, in_lambda)),
        };
        let at_identity = value.eval(&int(1)).ok();
        let from_pontryagin = match (m.pontryagin(), &rs) {
            (Some(p), Some(rs)) => Some(twisted_signature(p, &rs[degree])),
            _ => None,
        };
        degrees.push(DegreeVerdict {
            degree,
            value: value.clone(),
            constancy,
            witness,
            in_lambda,
            at_identity,
            from_pontryagin,
        });
    }
    let rigid_through = degrees.iter().take_while(|d| d.is_constant()).count().checked_sub(1);
    Ok(RigidityVerdict { degrees, rigid_through })
}

/// How the computed data relates to the implication "2-balanced ⇒ rigid".
/// The implication is reported on, never assumed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremStatus {
    /// Balanced and rigid through the computed order.
    Confirmed,
    /// Not balanced; no prediction is made.
    NotApplicable,
    /// Balanced, effective, and a non-constant coefficient was found.
    Violated,
    /// Balanced only because the action is not effective (weight gcd > 1),
    /// and not rigid.
    NonEffective,
}

pub fn theorem_status(balance: &BalanceReport, verdict: &RigidityVerdict) -> TheoremStatus {
    match (balance.balanced, verdict.is_rigid(), balance.primitive) {
        (false, _, _) => TheoremStatus::NotApplicable,
        (true, true, _) => TheoremStatus::Confirmed,
        (true, false, true) => TheoremStatus::Violated,
        (true, false, false) => TheoremStatus::NonEffective,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::localization::{is_two_balanced, FixedPoint};

    fn manifold(dim: u32, pts: &[&[i64]]) -> S1ManifoldData {
        S1ManifoldData::new("m", dim, pts.iter().map(|w| FixedPoint::new(w.to_vec())).collect(), None)
            .unwrap()
    }

    #[test]
    fn sphere_is_rigid() {
        let v = check_rigidity(&manifold(2, &[&[1], &[-1]]), 4).unwrap();
        assert!(v.is_rigid());
        assert_eq!(v.rigid_through, Some(4));
        for d in &v.degrees {
            assert_eq!(d.constancy, Constancy::Constant(int(0)));
        }
    }

    #[test]
    fn cp2_witness() {
        let cp2 = manifold(4, &[&[1, 2], &[-1, 1], &[-2, -1]]);
        let v = check_rigidity(&cp2, 1).unwrap();
        assert_eq!(v.rigid_through, Some(0));
        let w = v.first_witness().unwrap();
        assert_eq!(w.degree, 1);
        assert_eq!(w.witness, Some([(int(2), int(45)), (int(3), ratio(640, 9))]));
        assert_eq!(theorem_status(&is_two_balanced(&cp2), &v), TheoremStatus::NotApplicable);
    }

    #[test]
    fn doubled_cp2_is_flagged_non_effective() {
        let m = manifold(4, &[&[2, 4], &[-2, 2], &[-4, -2]]);
        let v = check_rigidity(&m, 1).unwrap();
        assert!(!v.is_rigid());
        assert_eq!(theorem_status(&is_two_balanced(&m), &v), TheoremStatus::NonEffective);
    }
}
