use super::S1ManifoldData;
use alloc::vec::Vec;
use num_integer::Integer;

/// Parity data for the 2-balanced condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    /// `Σ_j |m_j| mod 2` per fixed point.
    pub parities: Vec<u8>,
    pub balanced: bool,
    /// gcd of all weights; 0 when there are none.
    pub weight_gcd: u64,
    /// `weight_gcd == 1`, i.e. the action is effective.
    pub primitive: bool,
}

/// The weight-sum parity is the same at every fixed point. Signs of weights
/// do not affect parity.
pub fn is_two_balanced(m: &S1ManifoldData) -> BalanceReport {
    let parities: Vec<u8> = m
        .fixed_points()
        .iter()
        .map(|p| (p.weights.iter().map(|w| w.unsigned_abs()).sum::<u64>() % 2) as u8)
        .collect();
    let balanced = parities.windows(2).all(|w| w[0] == w[1]);
    let weight_gcd = m
        .fixed_points()
        .iter()
        .flat_map(|p| p.weights.iter())
        .fold(0u64, |g, w| g.gcd(&w.unsigned_abs()));
    BalanceReport { parities, balanced, weight_gcd, primitive: weight_gcd == 1 }
}
