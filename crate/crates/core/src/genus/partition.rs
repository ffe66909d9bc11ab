use crate::exact::{write_term, Ring, Scalar};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;
use num_traits::Zero;

/// Non-increasing list of positive parts, e.g. `[2, 1, 1]` for `p₂p₁²`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    /// The empty partition, indexing the constant monomial.
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiset union, i.e. the product of the corresponding monomials.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self::new(parts)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for part in (1..=max.min(rest)).rev() {
                cur.push(part);
                go(rest - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Monomial name like `p1^2*p2`; empty string for the empty partition.
    pub fn monomial_name(&self) -> String {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for &p in &self.0 {
            *counts.entry(p).or_default() += 1;
        }
        let pieces: Vec<String> = counts
            .iter()
            .map(|(p, k)| if *k == 1 { format!("p{p}") } else { format!("p{p}^{k}") })
            .collect();
        pieces.join("*")
    }
}

/// Error from parsing a partition key such as `"[2,1,1]"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePartitionError;

impl fmt::Display for ParsePartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("partition must look like [i1,i2,...] with positive non-increasing parts")
    }
}

impl FromStr for Partition {
    type Err = ParsePartitionError;

    /// Parses the canonical key form. Parts must already be non-increasing.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or(ParsePartitionError)?;
        let mut parts = Vec::new();
        if !inner.trim().is_empty() {
            for piece in inner.split(',') {
                let v: u32 = piece.trim().parse().map_err(|_| ParsePartitionError)?;
                if v == 0 {
                    return Err(ParsePartitionError);
                }
                parts.push(v);
            }
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ParsePartitionError);
        }
        Ok(Partition(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Polynomial in the Pontryagin classes `p₁, p₂, …` with rational
/// coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PPoly {
    terms: BTreeMap<Partition, Scalar>,
}

impl PPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::from_integer(1.into()))
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(Partition::empty(), c)
    }

    /// The single class `p_i`.
    pub fn p(i: u32) -> Self {
        Self::term(Partition::new(alloc::vec![i]), Scalar::from_integer(1.into()))
    }

    pub fn term(m: Partition, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn add_term(&mut self, m: Partition, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn coefficient(&self, m: &Partition) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Weight of every term if the polynomial is homogeneous (zero counts as
    /// homogeneous of any weight, reported as `None`).
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Partition::weight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }
}

impl fmt::Display for PPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            write_term(f, c, &m.monomial_name(), i == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PPoly({self})")
    }
}

impl Ring for PPoly {
    fn ring_zero() -> Self {
        PPoly::zero()
    }
    fn ring_one() -> Self {
        PPoly::one()
    }
    fn is_ring_zero(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn neg_ref(&self) -> Self {
        self.scale(&Scalar::from_integer((-1).into()))
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.union(mb), ca * cb);
            }
        }
        out
    }
    fn from_scalar(c: &Scalar) -> Self {
        Self::constant(c.clone())
    }
}
