use crate::exact::{QSeries, Ring, Scalar};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};
use core::fmt;

/// A constructor applied to the complexified tangent bundle `T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    /// `T` itself.
    T,
    /// `Sym^a T`, `a ≥ 2`.
    Sym(u32),
    /// `Λ^b T`, `b ≥ 2`.
    Lambda(u32),
}

impl Atom {
    /// `Sym^a T`, folding the degenerate powers.
    pub fn sym(a: u32) -> Option<Atom> {
        match a {
            0 => None,
            1 => Some(Atom::T),
            a => Some(Atom::Sym(a)),
        }
    }

    /// `Λ^b T`, folding the degenerate powers.
    pub fn lambda(b: u32) -> Option<Atom> {
        match b {
            0 => None,
            1 => Some(Atom::T),
            b => Some(Atom::Lambda(b)),
        }
    }

    /// Degree as a polynomial functor.
    pub fn degree(self) -> u32 {
        match self {
            Atom::T => 1,
            Atom::Sym(a) => a,
            Atom::Lambda(b) => b,
        }
    }

    /// Rank when `T` has rank `rank_t`.
    pub fn rank(self, rank_t: u64) -> u128 {
        match self {
            Atom::T => rank_t as u128,
            Atom::Sym(a) => binomial(rank_t as u128 + a as u128 - 1, a as u128),
            Atom::Lambda(b) => binomial(rank_t as u128, b as u128),
        }
    }

    fn sort_key(self) -> (Reverse<u32>, u8) {
        let kind = match self {
            Atom::Sym(_) => 0,
            Atom::Lambda(_) => 1,
            Atom::T => 2,
        };
        (Reverse(self.degree()), kind)
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

impl Ord for Atom {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Atom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::T => f.write_str("T"),
            Atom::Sym(a) => write!(f, "Sym{a}(T)"),
            Atom::Lambda(b) => write!(f, "L{b}(T)"),
        }
    }
}

/// Tensor product of atoms; the empty product is the trivial line bundle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<Atom>);

impl Monomial {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn new(mut atoms: Vec<Atom>) -> Self {
        atoms.sort();
        Self(atoms)
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|a| a.degree()).sum()
    }

    pub fn rank(&self, rank_t: u64) -> u128 {
        self.0.iter().map(|a| a.rank(rank_t)).product()
    }

    fn t_count(&self) -> usize {
        self.0.iter().filter(|a| **a == Atom::T).count()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (Reverse(self.degree()), &self.0).cmp(&(Reverse(other.degree()), &other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Integer-linear combination of [`Monomial`]s in normal form: no zero
/// coefficients and no monomial containing `T` twice (`T ⊗ T` is rewritten
/// as `Sym²T + Λ²T`).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BundleExpr {
    terms: BTreeMap<Monomial, i64>,
}

impl BundleExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn trivial() -> Self {
        Self::from_monomial(Monomial::unit(), 1)
    }

    pub fn tangent() -> Self {
        Self::atom(Atom::T)
    }

    pub fn atom(a: Atom) -> Self {
        Self::from_monomial(Monomial::new(alloc::vec![a]), 1)
    }

    pub fn from_monomial(m: Monomial, coeff: i64) -> Self {
        let mut out = Self::zero();
        out.add_monomial(m, coeff);
        out
    }

    /// Adds `coeff · m`, normalizing `T ⊗ T` away.
    pub fn add_monomial(&mut self, m: Monomial, coeff: i64) {
        if coeff == 0 {
            return;
        }
        if m.t_count() >= 2 {
            // replace one T⊗T pair and recurse on both results
            let mut rest = m.0.clone();
            for _ in 0..2 {
                let pos = rest.iter().position(|a| *a == Atom::T).expect("counted");
                rest.remove(pos);
            }
            for atom in [Atom::Sym(2), Atom::Lambda(2)] {
                let mut atoms = rest.clone();
                atoms.push(atom);
                self.add_monomial(Monomial::new(atoms), coeff);
            }
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest atom degree that occurs, for sizing character caches.
    pub fn max_atom_degree(&self) -> u32 {
        self.terms.keys().flat_map(|m| m.0.iter().map(|a| a.degree())).max().unwrap_or(0)
    }

    /// Virtual rank on a manifold of dimension `dim` (so `rank T = dim`).
    pub fn rank(&self, dim: u32) -> i128 {
        self.terms.iter().map(|(m, c)| *c as i128 * m.rank(dim as u64) as i128).sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_monomial(m.clone(), c * k);
        }
        out
    }
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            match (i == 0, *c < 0) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if m.0.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BundleExpr({self})")
    }
}

impl Ring for BundleExpr {
    fn ring_zero() -> Self {
        BundleExpr::zero()
    }
    fn ring_one() -> Self {
        BundleExpr::trivial()
    }
    fn is_ring_zero(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_monomial(m.clone(), *c);
        }
        out
    }
    fn neg_ref(&self) -> Self {
        self.scale(-1)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut atoms = ma.0.clone();
                atoms.extend_from_slice(&mb.0);
                out.add_monomial(Monomial::new(atoms), ca * cb);
            }
        }
        out
    }
    /// Only integral constants are meaningful; the caller guarantees that.
    fn from_scalar(c: &Scalar) -> Self {
        let k: i64 = c.to_integer().try_into().expect("integral bundle coefficient");
        Self::trivial().scale(k)
    }
}

/// `R_0, …, R_order` in normal form.
pub fn expand_r(order: usize) -> Vec<BundleExpr> {
    let mut acc: QSeries<BundleExpr> = QSeries::one(order);
    for i in 1..=order {
        // Λ_{q^i} T and Sym_{q^i} T, truncated
        let mut lambda = QSeries::one(order);
        let mut sym = QSeries::one(order);
        let mut k = 1usize;
        while k * i <= order {
            let b = u32::try_from(k).expect("small degree");
            let lam = Atom::lambda(b).map(BundleExpr::atom).expect("k ≥ 1");
            let sy = Atom::sym(b).map(BundleExpr::atom).expect("k ≥ 1");
            lambda = lambda.add(&QSeries::monomial(lam, k * i, order));
            sym = sym.add(&QSeries::monomial(sy, k * i, order));
            k += 1;
        }
        acc = acc.mul(&lambda).mul(&sym);
    }
    acc.into_coeffs()
}

/// Formats `R0 = …; R1 = …` as one line.
pub fn format_r_series(rs: &[BundleExpr]) -> String {
    let parts: Vec<String> = rs.iter().enumerate().map(|(i, r)| format!("R{i} = {r}")).collect();
    parts.join("; ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn first_three_terms() {
        let r = expand_r(2);
        assert_eq!(r[0].to_string(), "1");
        assert_eq!(r[1].to_string(), "2*T");
        assert_eq!(r[2].to_string(), "2*Sym2(T) + 2*L2(T) + 2*T");
        assert_eq!(format_r_series(&r), "R0 = 1; R1 = 2*T; R2 = 2*Sym2(T) + 2*L2(T) + 2*T");
    }

    #[test]
    fn tensor_square_normalizes() {
        let t = BundleExpr::tangent();
        let sq = t.mul_ref(&t);
        let expected = BundleExpr::atom(Atom::Sym(2)).add_ref(&BundleExpr::atom(Atom::Lambda(2)));
        assert_eq!(sq, expected);
        let cube = sq.mul_ref(&t);
        assert_eq!(cube.rank(4), 64);
    }

    #[test]
    fn ranks_of_r() {
        let r = expand_r(2);
        for dim in [2u32, 4, 6, 8] {
            let d = dim as i128;
            assert_eq!(r[1].rank(dim), 2 * d);
            assert_eq!(r[2].rank(dim), 2 * (d * d + d));
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(Atom::Sym(2).rank(4), 10);
        assert_eq!(Atom::Lambda(2).rank(4), 6);
        assert_eq!(Atom::Lambda(5).rank(4), 0);
    }
}
