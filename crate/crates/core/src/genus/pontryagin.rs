use super::{GenusPolynomial, Partition};
use crate::exact::Scalar;
use crate::{Error, Result};
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use num_traits::{One, Zero};

/// Pontryagin numbers of a closed oriented manifold of dimension `dim`.
///
/// Only partitions with `4 · weight = dim` carry numbers; absent keys are 0.
/// A zero-dimensional manifold is a signed count of points stored under the
/// empty partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PontryaginData {
    name: String,
    dim: u32,
    numbers: BTreeMap<Partition, Scalar>,
}

impl PontryaginData {
    pub fn new(
        name: impl Into<String>,
        dim: u32,
        numbers: BTreeMap<Partition, Scalar>,
    ) -> Result<Self> {
        if !dim.is_multiple_of(2) {
            return Err(Error::OddDimension(dim));
        }
        for key in numbers.keys() {
            if 4 * key.weight() != dim {
                return Err(Error::PartitionWeight { partition: key.to_string(), dim });
            }
        }
        let numbers = numbers.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(Self { name: name.into(), dim, numbers })
    }

    /// A single positively oriented point.
    pub fn point() -> Self {
        let mut numbers = BTreeMap::new();
        numbers.insert(Partition::empty(), Scalar::one());
        Self { name: "point".to_string(), dim: 0, numbers }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn number(&self, m: &Partition) -> Scalar {
        self.numbers.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn numbers(&self) -> &BTreeMap<Partition, Scalar> {
        &self.numbers
    }

    /// Pairs a homogeneous polynomial of weight `dim / 4` with the
    /// fundamental class. Other weights pair to zero.
    pub fn pair(&self, poly: &super::PPoly) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in poly.terms() {
            if 4 * m.weight() == self.dim {
                acc += c * self.number(m);
            }
        }
        acc
    }

    /// Pontryagin numbers of `self × other`, from `p(M × N) = p(M) · p(N)`
    /// (rationally, torsion ignored).
    pub fn product(&self, other: &Self, name: impl Into<String>) -> Self {
        let dim = self.dim + other.dim;
        let mut numbers = BTreeMap::new();
        if self.dim.is_multiple_of(4) && other.dim.is_multiple_of(4) {
            let w1 = self.dim / 4;
            for part in Partition::all_of(dim / 4) {
                let mut acc = Scalar::zero();
                split_parts(part.parts(), w1, &mut Vec::new(), &mut Vec::new(), &mut |a, b| {
                    let left = self.number(&Partition::new(a.to_vec()));
                    if left.is_zero() {
                        return;
                    }
                    acc += left * other.number(&Partition::new(b.to_vec()));
                });
                if !acc.is_zero() {
                    numbers.insert(part, acc);
                }
            }
        }
        Self { name: name.into(), dim, numbers }
    }
}

/// Enumerates every way to write each part `i_k = a_k + b_k` with
/// `Σ a_k = left_weight`; zero summands drop out of the partitions.
fn split_parts(
    parts: &[u32],
    left_weight: u32,
    left: &mut Vec<u32>,
    right: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32], &[u32]),
) {
    let Some((&first, rest)) = parts.split_first() else {
        if left_weight == 0 {
            visit(left, right);
        }
        return;
    };
    for a in 0..=first.min(left_weight) {
        left.push(a);
        right.push(first - a);
        split_parts(rest, left_weight - a, left, right, visit);
        left.pop();
        right.pop();
    }
}

/// The characteristic number `⟨g, [M]⟩`; zero unless `4 · deg g = dim M`.
pub fn evaluate_genus(m: &PontryaginData, g: &GenusPolynomial) -> Scalar {
    if 4 * g.degree != m.dim {
        return Scalar::zero();
    }
    m.pair(&g.poly)
}
