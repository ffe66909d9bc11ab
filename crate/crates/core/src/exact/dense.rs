//! Dense univariate polynomials over `Q`, ascending coefficient order.
//! Only what canonicalization of rational functions needs.

use super::Scalar;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

pub(crate) fn trim(p: &mut Vec<Scalar>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[Scalar]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Euclidean division; `b` must be nonzero.
pub(crate) fn div_rem(a: &[Scalar], b: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead = b[db].clone();
    let mut rem: Vec<Scalar> = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Scalar::zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] / &lead;
        let shift = dr - db;
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                rem[shift + k] -= &c * bk;
            }
        }
        quot[shift] = c;
        // leading term cancels exactly
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn make_monic(p: &mut [Scalar]) {
    if let Some(lead) = p.last().cloned() {
        if !lead.is_one() {
            for c in p.iter_mut() {
                *c = &*c / &lead;
            }
        }
    }
}

/// Monic gcd. `gcd(0, 0)` is the empty polynomial.
pub(crate) fn gcd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
        // keep coefficient sizes in check
        make_monic(&mut y);
    }
    make_monic(&mut x);
    x
}
