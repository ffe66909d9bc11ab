//! Characteristic numbers from Pontryagin data.
//!
//! Polynomials in the Pontryagin classes are indexed by [`Partition`]s: the
//! monomial `p_{i₁} p_{i₂} ⋯` is the partition `[i₁, i₂, …]`. A manifold is
//! modelled non-equivariantly by its Pontryagin numbers alone.

mod multiplicative;
mod partition;
mod pontryagin;
mod twisted;

pub use multiplicative::{
    a_hat_series, half_coth_series, l_series, multiplicative_sequence, multiplicative_sequence_graded,
    power_sums, GenusPolynomial,
};
pub use partition::{PPoly, Partition};
pub use pontryagin::{evaluate_genus, PontryaginData};
pub use twisted::{elliptic_genus, twisted_signature, ChernCharacters};
