use super::{half_coth_series, multiplicative_sequence_graded, power_sums, PPoly, PontryaginData};
use crate::exact::{int, QSeries, Scalar};
use crate::rseries::{expand_r, Atom, BundleExpr};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_traits::{One, Zero};

/// Chern characters of constructions on `T = TX ⊗ C` for a fixed dimension,
/// as polynomials in the Pontryagin classes graded by weight.
///
/// With `n = dim/2` formal roots `x_j`, the Chern roots of `T` are `±x_j`.
/// The power sums `P_k = Σ e^{k y}` over those roots are even in each `x_j`,
/// so everything reduces to power sums of `x_j²` and then to `p_i` by
/// Newton's identities. Characters of `Λ^b` and `Sym^a` follow from `P_k`.
pub struct ChernCharacters {
    top: usize,
    n_roots: u32,
    exp_power_sums: Vec<QSeries<PPoly>>,
    exterior: Vec<QSeries<PPoly>>,
    symmetric: Vec<QSeries<PPoly>>,
}

impl ChernCharacters {
    /// Characters for a manifold of dimension `dim`, truncated at weight
    /// `dim / 4`.
    pub fn new(dim: u32) -> Self {
        let top = (dim / 4) as usize;
        let n_roots = dim / 2;
        let one = QSeries::one(top);
        Self {
            top,
            n_roots,
            exp_power_sums: alloc::vec![QSeries::constant(PPoly::constant(int(n_roots as i64 * 2)), top)],
            exterior: alloc::vec![one.clone()],
            symmetric: alloc::vec![one],
        }
    }

    /// `P_k = Σ_r e^{k y_r} = 2n + Σ_{l≥1} 2 k^{2l} s_l / (2l)!`.
    fn exp_power_sum(&mut self, k: usize) -> QSeries<PPoly> {
        while self.exp_power_sums.len() <= k {
            let kk = self.exp_power_sums.len() as i64;
            let s = power_sums(self.top as u32);
            let mut coeffs = alloc::vec![PPoly::constant(int(2 * self.n_roots as i64))];
            let mut fact = Scalar::one();
            let mut kpow = Scalar::one();
            for l in 1..=self.top {
                fact *= int((2 * l - 1) as i64) * int((2 * l) as i64);
                kpow *= int(kk * kk);
                coeffs.push(s[l].scale(&(int(2) * &kpow / &fact)));
            }
            self.exp_power_sums.push(QSeries::new(coeffs, self.top));
        }
        self.exp_power_sums[k].clone()
    }

    /// Newton recursion `k c_k = Σ_{i=1}^k (±1)^{i-1} c_{k-i} P_i`.
    fn extend(&mut self, upto: usize, exterior: bool) {
        loop {
            let have = if exterior { self.exterior.len() } else { self.symmetric.len() };
            if have > upto {
                return;
            }
            let k = have;
            let mut acc: QSeries<PPoly> = QSeries::zero(self.top);
            for i in 1..=k {
                let p = self.exp_power_sum(i);
                let prev = if exterior { &self.exterior[k - i] } else { &self.symmetric[k - i] };
                let term = prev.mul(&p);
                acc = if exterior && i % 2 == 0 { acc.sub(&term) } else { acc.add(&term) };
            }
            let inv = PPoly::constant(int(k as i64).recip());
            let next = acc.scale(&inv);
            if exterior {
                self.exterior.push(next);
            } else {
                self.symmetric.push(next);
            }
        }
    }

    /// `ch` of a single atom.
    pub fn atom(&mut self, a: Atom) -> QSeries<PPoly> {
        match a {
            Atom::T => self.exp_power_sum(1),
            Atom::Lambda(b) => {
                self.extend(b as usize, true);
                self.exterior[b as usize].clone()
            }
            Atom::Sym(a) => {
                self.extend(a as usize, false);
                self.symmetric[a as usize].clone()
            }
        }
    }

    /// `ch(W)` truncated at the top weight.
    pub fn bundle(&mut self, w: &BundleExpr) -> QSeries<PPoly> {
        let mut cache: BTreeMap<Atom, QSeries<PPoly>> = BTreeMap::new();
        let mut out = QSeries::zero(self.top);
        for (m, c) in w.terms() {
            let mut value = QSeries::constant(PPoly::constant(int(c)), self.top);
            for atom in m.atoms() {
                if !cache.contains_key(atom) {
                    let ch = self.atom(*atom);
                    cache.insert(*atom, ch);
                }
                value = value.mul(&cache[atom]);
            }
            out = out.add(&value);
        }
        out
    }
}

/// `∏_j x_j coth(x_j/2) = 2^n ∏_j (x_j/2) coth(x_j/2)` with `n = dim/2`,
/// graded by weight up to `dim/4`.
fn signature_class(dim: u32) -> QSeries<PPoly> {
    let top = dim / 4;
    let series = half_coth_series(2 * top as usize);
    let graded = multiplicative_sequence_graded(&series, top).expect("series is even and normalized");
    let two_pow = num_traits::pow(int(2), (dim / 2) as usize);
    graded.scale(&PPoly::constant(two_pow))
}

/// `sign(X, W)`: the top-degree part of `ch(W) · ∏_j x_j coth(x_j/2)`
/// paired with the fundamental class. Vanishes unless `dim ≡ 0 (mod 4)`.
pub fn twisted_signature(m: &PontryaginData, w: &BundleExpr) -> Scalar {
    let mut ctx = ChernCharacters::new(m.dim());
    twisted_with(m, w, &mut ctx, &signature_class(m.dim()))
}

fn twisted_with(
    m: &PontryaginData,
    w: &BundleExpr,
    ctx: &mut ChernCharacters,
    sig: &QSeries<PPoly>,
) -> Scalar {
    if !m.dim().is_multiple_of(4) {
        return Scalar::zero();
    }
    let top = (m.dim() / 4) as usize;
    let product = ctx.bundle(w).mul(sig);
    m.pair(product.coeff(top))
}

/// `Φ(X) = Σ_i sign(X, R_i) q^i` through `q^order`.
pub fn elliptic_genus(m: &PontryaginData, order: usize) -> QSeries<Scalar> {
    let mut ctx = ChernCharacters::new(m.dim());
    let sig = signature_class(m.dim());
    let coeffs = expand_r(order).iter().map(|r| twisted_with(m, r, &mut ctx, &sig)).collect();
    QSeries::new(coeffs, order)
}
