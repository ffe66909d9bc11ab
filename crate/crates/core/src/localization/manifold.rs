use crate::exact::{LaurentPoly, Scalar};
use crate::genus::PontryaginData;
use crate::{Error, Result};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

/// An isolated fixed point: the weights of the tangent representation and an
/// orientation sign comparing the complex orientation of those weights with
/// the orientation of the manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPoint {
    pub weights: Vec<i64>,
    pub sign: i8,
}

impl FixedPoint {
    pub fn new(weights: Vec<i64>) -> Self {
        Self { weights, sign: 1 }
    }

    pub fn with_sign(weights: Vec<i64>, sign: i8) -> Self {
        Self { weights, sign }
    }

    /// `T_p ⊗ C = Σ_j (t^{m_j} + t^{-m_j})` in the `μ` representation.
    pub fn tangent_character(&self) -> LaurentPoly {
        let mut ch = LaurentPoly::zero();
        for &m in &self.weights {
            ch.add_term(2 * m, Scalar::from_integer(1.into()));
            ch.add_term(-2 * m, Scalar::from_integer(1.into()));
        }
        ch
    }
}

/// A closed oriented `dim`-manifold with a circle action whose fixed points
/// are isolated, optionally with its Pontryagin numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S1ManifoldData {
    name: String,
    dim: u32,
    fixed_points: Vec<FixedPoint>,
    pontryagin: Option<PontryaginData>,
}

impl S1ManifoldData {
    pub fn new(
        name: impl Into<String>,
        dim: u32,
        fixed_points: Vec<FixedPoint>,
        pontryagin: Option<PontryaginData>,
    ) -> Result<Self> {
        if !dim.is_multiple_of(2) {
            return Err(Error::OddDimension(dim));
        }
        if fixed_points.is_empty() {
            return Err(Error::NoFixedPoints);
        }
        let n = (dim / 2) as usize;
        for (point, fp) in fixed_points.iter().enumerate() {
            if fp.weights.len() != n {
                return Err(Error::WeightListLength { point, expected: n, found: fp.weights.len() });
            }
            if let Some(index) = fp.weights.iter().position(|&m| m == 0) {
                return Err(Error::ZeroWeight { point, index });
            }
            if fp.sign != 1 && fp.sign != -1 {
                return Err(Error::InvalidSign { point, sign: fp.sign as i32 });
            }
        }
        if let Some(p) = &pontryagin {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
            }
        }
        let name = name.into();
        let pontryagin = pontryagin.map(|p| p.with_name(name.clone()));
        Ok(Self { name, dim, fixed_points, pontryagin })
    }

    /// The point with the trivial action, the unit for products.
    pub fn point() -> Self {
        Self {
            name: String::from("point"),
            dim: 0,
            fixed_points: alloc::vec![FixedPoint::new(Vec::new())],
            pontryagin: Some(PontryaginData::point()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn fixed_points(&self) -> &[FixedPoint] {
        &self.fixed_points
    }

    pub fn pontryagin(&self) -> Option<&PontryaginData> {
        self.pontryagin.as_ref()
    }

    /// Renames the manifold and its Pontryagin data.
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self.pontryagin = self.pontryagin.map(|p| p.with_name(self.name.clone()));
        self
    }
}

/// Product action on `M1 × M2`: fixed points are pairs, weights concatenate,
/// signs multiply.
pub fn product_manifold(m1: &S1ManifoldData, m2: &S1ManifoldData) -> S1ManifoldData {
    let name = if m1.dim == 0 {
        m2.name.clone()
    } else if m2.dim == 0 {
        m1.name.clone()
    } else {
        format!("{} x {}", m1.name, m2.name)
    };
    let mut fixed_points = Vec::with_capacity(m1.fixed_points.len() * m2.fixed_points.len());
    for a in &m1.fixed_points {
        for b in &m2.fixed_points {
            let mut weights = a.weights.clone();
            weights.extend_from_slice(&b.weights);
            fixed_points.push(FixedPoint::with_sign(weights, a.sign * b.sign));
        }
    }
    let pontryagin = match (&m1.pontryagin, &m2.pontryagin) {
        (Some(p1), Some(p2)) => Some(p1.product(p2, name.clone())),
        _ => None,
    };
    S1ManifoldData { name, dim: m1.dim + m2.dim, fixed_points, pontryagin }
}
