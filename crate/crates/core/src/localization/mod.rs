//! S¹-equivariant computations from isolated fixed points.
//!
//! A fixed point `p` with weights `m_1, …, m_n` contributes
//! `χ_W(p) · ∏_j (λ^{m_j} + 1)/(λ^{m_j} - 1)` to the equivariant twisted
//! signature and `∏_j 1/(μ^{m_j} - μ^{-m_j})` to the equivariant Â-genus,
//! each multiplied by the point's orientation sign.

mod balance;
mod lemma2;
mod manifold;
mod rigidity;
mod signature;

pub use balance::{is_two_balanced, BalanceReport};
pub use lemma2::{lemma2_verify, Lemma2Report};
pub use manifold::{product_manifold, FixedPoint, S1ManifoldData};
pub use rigidity::{check_rigidity, theorem_status, DegreeVerdict, RigidityVerdict, TheoremStatus};
pub use signature::{
    equivariant_a_hat, equivariant_elliptic_genus, equivariant_twisted_signature, signature_factor,
};
