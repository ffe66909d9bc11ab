//! The bundle series `R(q,T) = ⊗_{i≥1} Λ_{q^i}T ⊗ ⊗_{j≥1} Sym_{q^j}T`.
//!
//! Two independent routes compute its restriction to a fixed point:
//! [`expand_r`] followed by [`restrict_character`] goes through symbolic
//! bundle expressions, while [`r_character_series`] multiplies geometric
//! series of characters directly. They must agree exactly.

mod bundle;
mod character;

pub use bundle::{expand_r, format_r_series, Atom, BundleExpr, Monomial};
pub use character::{r_character_series, restrict_character, tangent_roots};
