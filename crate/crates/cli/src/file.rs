//! JSON manifold files.
//!
//! ```json
//! {
//!   "name": "CP2",
//!   "dimension": 4,
//!   "fixed_points": [
//!     { "weights": [1, 2] },
//!     { "weights": [-1, 1] },
//!     { "weights": [-2, -1], "sign": 1 }
//!   ],
//!   "pontryagin_numbers": { "[1]": "3" }
//! }
//! ```
//!
//! Rationals are strings `"a/b"` (or `"a"`), never JSON numbers. Serialization
//! uses the key order above and omits `"sign"` when it is `+1`.

use ellgenus_core::genus::{Partition, PontryaginData};
use ellgenus_core::localization::{FixedPoint, S1ManifoldData};
use ellgenus_core::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("schema violation: {0}")]
    Schema(#[from] serde_json::Error),
    #[error("dimension must be even, found {0}")]
    OddDimension(u32),
    #[error("fixed_points is empty")]
    NoFixedPoints,
    #[error("zero weight in fixed_points[{point}].weights[{index}]")]
    ZeroWeight { point: usize, index: usize },
    #[error("weight-list length of fixed_points[{point}].weights: expected {expected}, found {found}")]
    WeightListLength { point: usize, expected: usize, found: usize },
    #[error("fixed_points[{point}].sign must be 1 or -1, found {sign}")]
    InvalidSign { point: usize, sign: i64 },
    #[error("malformed partition key in pontryagin_numbers: {key:?}")]
    PartitionKey { key: String },
    #[error("pontryagin_numbers key {key:?} has weight {weight}, expected dimension/4 for dimension {dimension}")]
    PartitionWeight { key: String, weight: u32, dimension: u32 },
    #[error("malformed rational in pontryagin_numbers[{key:?}]: {value:?}")]
    MalformedRational { key: String, value: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixedPointEntry {
    pub weights: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i64>,
}

/// Raw file contents before validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldFile {
    pub name: String,
    pub dimension: u32,
    pub fixed_points: Vec<FixedPointEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pontryagin_numbers: Option<BTreeMap<String, String>>,
}

impl ManifoldFile {
    pub fn validate(&self) -> Result<S1ManifoldData, FileError> {
        let dim = self.dimension;
        if !dim.is_multiple_of(2) {
            return Err(FileError::OddDimension(dim));
        }
        if self.fixed_points.is_empty() {
            return Err(FileError::NoFixedPoints);
        }
        let n = (dim / 2) as usize;
        let mut points = Vec::with_capacity(self.fixed_points.len());
        for (point, fp) in self.fixed_points.iter().enumerate() {
            if let Some(index) = fp.weights.iter().position(|&w| w == 0) {
                return Err(FileError::ZeroWeight { point, index });
            }
            if fp.weights.len() != n {
                return Err(FileError::WeightListLength { point, expected: n, found: fp.weights.len() });
            }
            let sign = match fp.sign.unwrap_or(1) {
                1 => 1,
                -1 => -1,
                sign => return Err(FileError::InvalidSign { point, sign }),
            };
            points.push(FixedPoint::with_sign(fp.weights.clone(), sign));
        }
        let pontryagin = match &self.pontryagin_numbers {
            None => None,
            Some(map) => {
                let mut numbers = BTreeMap::new();
                for (key, value) in map {
                    let part: Partition =
                        key.parse().map_err(|_| FileError::PartitionKey { key: key.clone() })?;
                    if 4 * part.weight() != dim {
                        return Err(FileError::PartitionWeight {
                            key: key.clone(),
                            weight: part.weight(),
                            dimension: dim,
                        });
                    }
                    let v = parse_rational(value).ok_or_else(|| FileError::MalformedRational {
                        key: key.clone(),
                        value: value.clone(),
                    })?;
                    numbers.insert(part, v);
                }
                Some(PontryaginData::new(self.name.clone(), dim, numbers).expect("validated above"))
            }
        };
        Ok(S1ManifoldData::new(self.name.clone(), dim, points, pontryagin)
            .expect("validated above"))
    }

    pub fn from_data(m: &S1ManifoldData) -> Self {
        Self {
            name: m.name().to_string(),
            dimension: m.dim(),
            fixed_points: m
                .fixed_points()
                .iter()
                .map(|p| FixedPointEntry {
                    weights: p.weights.clone(),
                    sign: (p.sign != 1).then_some(p.sign as i64),
                })
                .collect(),
            pontryagin_numbers: m.pontryagin().map(|p| {
                p.numbers().iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
            }),
        }
    }
}

/// Parses `"a"` or `"a/b"` with optional sign; rejects zero denominators and
/// anything else (floats, whitespace inside the number).
pub fn parse_rational(s: &str) -> Option<Scalar> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let valid_int = |t: &str, signed: bool| {
        let digits = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) || den.is_some_and(|d| !valid_int(d, false)) {
        return None;
    }
    if den.is_some_and(|d| d.bytes().all(|b| b == b'0')) {
        return None;
    }
    s.parse().ok()
}

pub fn parse_manifold_file(text: &str) -> Result<S1ManifoldData, FileError> {
    let raw: ManifoldFile = serde_json::from_str(text)?;
    raw.validate()
}

/// Canonical pretty-printed JSON with a trailing newline.
pub fn serialize_manifold(m: &S1ManifoldData) -> String {
    let mut s = serde_json::to_string_pretty(&ManifoldFile::from_data(m)).expect("plain data");
    s.push('\n');
    s
}
