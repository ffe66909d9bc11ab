//! Exact computation of multiplicative genera, the elliptic genus and their
//! S¹-equivariant refinements from isolated fixed-point data.
//!
//! Everything in this crate is pure arithmetic over arbitrary-precision
//! rationals. It only needs `alloc`, so it builds without `std`; file formats
//! and the command line live in the `ellgenus` companion crate.
//!
//! The crate is organised bottom-up:
//!
//! - [`exact`]: rationals, Laurent polynomials in the half-character `μ`
//!   (`λ = μ²`), rational functions in canonical form and truncated
//!   q-series over any coefficient ring.
//! - [`genus`]: partitions, polynomials in Pontryagin classes, multiplicative
//!   sequences, twisted signatures and the elliptic genus from Pontryagin
//!   numbers.
//! - [`rseries`]: the bundle series `R(q,T)` both symbolically and at the
//!   level of characters.
//! - [`localization`]: fixed-point formulas, the 2-balanced check, rigidity
//!   verdicts and the representation-difference factorization check.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod exact;
pub mod genus;
pub mod localization;
pub mod rseries;

pub use error::Error;
pub use exact::{Constancy, LaurentPoly, QSeries, RationalFunc, Ring, Scalar};
pub use genus::{GenusPolynomial, PPoly, Partition, PontryaginData};
pub use localization::{
    BalanceReport, DegreeVerdict, FixedPoint, Lemma2Report, RigidityVerdict, S1ManifoldData,
};
pub use rseries::{Atom, BundleExpr, Monomial};

pub type Result<T> = core::result::Result<T, Error>;
