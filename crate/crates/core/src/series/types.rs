//! Counting augmented paths by type: the t_k recurrence, the k-Catalan
//! denominator polynomials Q_k, and the rational generating functions T_k.
//!
//! The coefficient of x_1^{i_1} ... x_r^{i_r} in
//! T_k = x_1 Q_k(x_2..x_r) / Q_k(x_1..x_r) is the number of augmented
//! k-Catalan paths with i_j lattice points at level j.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::lattice::binomial;
use crate::series::multipoly::MultiPoly;
use crate::series::truncated::TruncatedMultiSeries;
use crate::spitzer::TypeVector;

/// Number of augmented k-Catalan paths of type `tv`.
///
/// Recurrence: t_k((i_1)) = [i_1 = 1]; zero when some i_j < i_r for
/// j in [r-k+1, r-1] (or when 1 < r < k); otherwise
/// t_k = binom(i_{r-k+1} - 1, i_r) * t_k(type with i_r removed from the
/// trailing window of k levels).
pub fn type_count(tv: &TypeVector, k: u32) -> BigUint {
    assert!(k >= 2, "k must be at least 2");
    count_rec(tv.counts(), k as usize)
}

fn count_rec(counts: &[u64], k: usize) -> BigUint {
    let r = counts.len();
    if r == 1 {
        return if counts[0] == 1 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    if r < k {
        // Lattice points above level 1 force the path to reach level >= k,
        // so canonical types shorter than k are impossible (except (1)).
        return BigUint::zero();
    }
    let last = counts[r - 1];
    let lo = r - k;
    if counts[lo..r - 1].iter().any(|&c| c < last) {
        return BigUint::zero();
    }
    let ways = binomial(counts[lo] - 1, last);
    if ways.is_zero() {
        return BigUint::zero();
    }
    let mut reduced: Vec<u64> = counts.to_vec();
    for c in &mut reduced[lo..r] {
        *c -= last;
    }
    while reduced.last() == Some(&0) {
        reduced.pop();
    }
    debug_assert!(
        !reduced.is_empty(),
        "binom > 0 forces i_1 > i_r when lo = 0"
    );
    ways * count_rec(&reduced, k)
}

/// The k-Catalan denominator polynomial over the variables x_lo..x_hi
/// (1-based, inclusive) inside an ambient list of `nvars` variables: the
/// signed sum of x_S over subsets S of [lo,hi] that are disjoint unions of
/// k consecutive integers, with sign (-1)^{|S|/k}. Empty interval gives 1.
pub fn q_poly_interval(k: u32, nvars: usize, lo: usize, hi: usize) -> MultiPoly {
    assert!(k >= 2, "k must be at least 2");
    assert!(hi <= nvars);
    let mut out = MultiPoly::zero(nvars);
    let mut exps = vec![0u32; nvars];
    place_blocks(k as usize, lo, hi, &mut exps, 0, &mut out);
    out
}

fn place_blocks(
    k: usize,
    pos: usize,
    hi: usize,
    exps: &mut Vec<u32>,
    blocks: usize,
    out: &mut MultiPoly,
) {
    if pos + k - 1 > hi {
        let sign = if blocks.is_multiple_of(2) {
            num_bigint::BigInt::one()
        } else {
            -num_bigint::BigInt::one()
        };
        let term = MultiPoly::monomial(exps.len(), exps.clone(), sign);
        *out = &*out + &term;
        return;
    }
    // No block starting at pos.
    place_blocks(k, pos + 1, hi, exps, blocks, out);
    // Block [pos, pos+k-1].
    for i in pos..pos + k {
        exps[i - 1] = 1;
    }
    place_blocks(k, pos + k, hi, exps, blocks + 1, out);
    for i in pos..pos + k {
        exps[i - 1] = 0;
    }
}

/// Q_k(x_1, ..., x_r).
pub fn q_poly(k: u32, r: usize) -> MultiPoly {
    q_poly_interval(k, r, 1, r)
}

/// T_k(x_1, ..., x_r) expanded to total degree `trunc`.
pub fn t_series(k: u32, r: usize, trunc: u32) -> TruncatedMultiSeries {
    assert!(k >= 2, "k must be at least 2");
    assert!(r >= 1, "at least one variable is required");
    let num = &MultiPoly::var(r, 1) * &q_poly_interval(k, r, 2, r);
    let den = q_poly_interval(k, r, 1, r);
    TruncatedMultiSeries::new(num, trunc).div(&TruncatedMultiSeries::new(den, trunc))
}
