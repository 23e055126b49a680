//! The restricted Foata-Strehl group action.
//!
//! A permutation w is x-decomposable when its letters >= x form a contiguous
//! block with x at one end; the x-flip moves x to the other end of the block
//! (equivalently, it swaps the one nonempty subtree of x in the Foata-Strehl
//! tree to the other side). Flips are commuting involutions; extending them
//! by the identity where undefined generates the restricted action. Orbits
//! inside any flip-closed class have size 2^|I| where I is the set of flip
//! indices, each orbit carrying one distinguished representative (i+1 to the
//! right of i for every i in I).
//!
//! Orbit enumeration scans class members in lexicographic order and emits a
//! record exactly when the member is distinguished; the exhaustive census
//! shards by first letter so it can run on several threads.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fstree::FsTree;
use crate::series::{BiSeries, UniSeries, YPoly};
use crate::spitzer::Permutation;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ActionError {
    #[error("letter {letter} does not occur in a permutation of length {len}")]
    UnknownLetter { letter: u32, len: usize },
    #[error(
        "class '{class}' is not closed under flips at n={n}: \
         {from} is {flip}-decomposable but its flip {to} is outside the class"
    )]
    NotFlipClosed {
        class: String,
        n: usize,
        from: String,
        flip: u32,
        to: String,
    },
}

/// A pattern-closed class of permutations, given by a membership predicate.
#[derive(Clone)]
pub struct PermClass {
    name: String,
    pred: Arc<dyn Fn(&Permutation) -> bool + Send + Sync>,
}

impl PermClass {
    pub fn new(
        name: impl Into<String>,
        pred: impl Fn(&Permutation) -> bool + Send + Sync + 'static,
    ) -> PermClass {
        PermClass {
            name: name.into(),
            pred: Arc::new(pred),
        }
    }

    /// Every permutation.
    pub fn all() -> PermClass {
        PermClass::new("all", |_| true)
    }

    /// Short Catalan-Spitzer permutations: levelwise numbered trees.
    pub fn short_csp() -> PermClass {
        PermClass::new("short-csp", |p: &Permutation| {
            FsTree::build(&p.as_word())
                .expect("permutation letters are distinct")
                .is_levelwise_numbered()
                .expect("permutation labels are 1..=n")
        })
    }

    /// Short k-Catalan-Spitzer permutations: levelwise numbered trees whose
    /// maximal right chains have length divisible by k-1.
    pub fn short_k_csp(k: u32) -> PermClass {
        assert!(k >= 2, "k must be at least 2");
        PermClass::new(format!("short-{k}-csp"), move |p: &Permutation| {
            let tree = FsTree::build(&p.as_word()).expect("permutation letters are distinct");
            tree.is_levelwise_numbered()
                .expect("permutation labels are 1..=n")
                && tree.k_condition(k)
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        (self.pred)(p)
    }
}

impl std::fmt::Debug for PermClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermClass")
            .field("name", &self.name)
            .finish()
    }
}

/// The three pieces of an x-decomposition w = w1 w2 w3.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XDecomposition {
    pub prefix: Vec<u32>,
    pub block: Vec<u32>,
    pub suffix: Vec<u32>,
}

// Positions (lo, hi) of the block of letters >= x, provided they are
// contiguous and x sits at one end.
fn block_bounds(w: &[u32], x: u32) -> Option<(usize, usize)> {
    let n = w.len();
    let count = n - x as usize + 1;
    let mut lo = usize::MAX;
    let mut hi = 0;
    for (i, &v) in w.iter().enumerate() {
        if v >= x {
            if lo == usize::MAX {
                lo = i;
            }
            hi = i;
        }
    }
    debug_assert_ne!(lo, usize::MAX);
    if hi - lo + 1 != count {
        return None;
    }
    if w[lo] == x || w[hi] == x {
        Some((lo, hi))
    } else {
        None
    }
}

/// The unique x-decomposition of w, if w is x-decomposable.
pub fn x_decompose(w: &Permutation, x: u32) -> Result<Option<XDecomposition>, ActionError> {
    if x == 0 || x as usize > w.len() {
        return Err(ActionError::UnknownLetter {
            letter: x,
            len: w.len(),
        });
    }
    Ok(block_bounds(w.values(), x).map(|(lo, hi)| XDecomposition {
        prefix: w.values()[..lo].to_vec(),
        block: w.values()[lo..=hi].to_vec(),
        suffix: w.values()[hi + 1..].to_vec(),
    }))
}

fn flip_slice(w: &[u32], x: u32) -> Vec<u32> {
    let mut out = w.to_vec();
    if x == 0 || x as usize > w.len() {
        return out;
    }
    if let Some((lo, hi)) = block_bounds(w, x) {
        if w[lo] == x {
            out[lo..=hi].rotate_left(1);
        } else {
            out[lo..=hi].rotate_right(1);
        }
    }
    out
}

/// The x-flip: move x to the other end of its block, or leave w unchanged
/// when w is not x-decomposable.
pub fn flip(w: &Permutation, x: u32) -> Permutation {
    Permutation::from_slice_validated(&flip_slice(w.values(), x))
}

fn flip_set_slice(w: &[u32]) -> Vec<u32> {
    let n = w.len();
    if n < 2 {
        return Vec::new();
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in w.iter().enumerate() {
        pos[v as usize - 1] = i;
    }
    // lo[x-1] / hi[x-1]: extreme positions among the letters >= x.
    let mut lo = pos.clone();
    let mut hi = pos.clone();
    for x in (0..n - 1).rev() {
        lo[x] = lo[x].min(lo[x + 1]);
        hi[x] = hi[x].max(hi[x + 1]);
    }
    let mut set = Vec::new();
    for x in 1..n as u32 {
        let idx = x as usize - 1;
        let span = hi[idx] - lo[idx] + 1;
        if span == n - idx && (pos[idx] == lo[idx] || pos[idx] == hi[idx]) {
            set.push(x);
        }
    }
    set
}

/// The flip-index set I([w]) = {i < n : w is i-decomposable}, an invariant
/// of the orbit of w.
pub fn flip_set(w: &Permutation) -> BTreeSet<u32> {
    flip_set_slice(w.values()).into_iter().collect()
}

fn is_distinguished_slice(w: &[u32], flips: &[u32]) -> bool {
    flips.iter().all(|&i| {
        let pos_i = w.iter().position(|&v| v == i).expect("letter present");
        let pos_next = w.iter().position(|&v| v == i + 1).expect("letter present");
        pos_next > pos_i
    })
}

/// True when w is the distinguished representative of its orbit: for each
/// flip index i, the letter i+1 lies to the right of i.
pub fn is_distinguished(w: &Permutation) -> bool {
    is_distinguished_slice(w.values(), &flip_set_slice(w.values()))
}

/// One orbit of the restricted action: representative, flip indices, size.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub rep: Permutation,
    #[serde(rename = "I")]
    pub flip_indices: BTreeSet<u32>,
    pub size: u64,
}

impl OrbitRecord {
    /// Materialize the 2^|I| orbit members, sorted lexicographically.
    pub fn members(&self) -> Vec<Permutation> {
        let flips: Vec<u32> = self.flip_indices.iter().copied().collect();
        let mut out = Vec::with_capacity(self.size as usize);
        for mask in 0u64..1 << flips.len() {
            let mut w = self.rep.values().to_vec();
            for (bit, &x) in flips.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    w = flip_slice(&w, x);
                }
            }
            out.push(Permutation::from_slice_validated(&w));
        }
        out.sort();
        out.dedup();
        debug_assert_eq!(out.len() as u64, self.size);
        out
    }
}

fn next_permutation(vals: &mut [u32]) -> bool {
    if vals.len() < 2 {
        return false;
    }
    let mut i = vals.len() - 1;
    while i > 0 && vals[i - 1] >= vals[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = vals.len() - 1;
    while vals[j] <= vals[i - 1] {
        j -= 1;
    }
    vals.swap(i - 1, j);
    vals[i..].reverse();
    true
}

fn each_permutation<E>(n: usize, mut f: impl FnMut(&[u32]) -> Result<(), E>) -> Result<(), E> {
    let mut vals: Vec<u32> = (1..=n as u32).collect();
    loop {
        f(&vals)?;
        if !next_permutation(&mut vals) {
            return Ok(());
        }
    }
}

/// Partition the class members of S_n into orbits. Flip-closure is verified
/// on every member; the first violation is reported as an error. Records
/// appear in lexicographic order of their representatives.
pub fn orbits(class: &PermClass, n: usize) -> Result<Vec<OrbitRecord>, ActionError> {
    let mut records = Vec::new();
    let mut member_total = 0u64;
    let mut size_total = 0u64;
    each_permutation(n, |w| {
        let perm = Permutation::from_slice_validated(w);
        if !class.contains(&perm) {
            return Ok(());
        }
        member_total += 1;
        let flips = flip_set_slice(w);
        for &i in &flips {
            let image = flip_slice(w, i);
            let image_perm = Permutation::from_slice_validated(&image);
            if !class.contains(&image_perm) {
                return Err(ActionError::NotFlipClosed {
                    class: class.name().to_owned(),
                    n,
                    from: perm.to_string(),
                    flip: i,
                    to: image_perm.to_string(),
                });
            }
            assert_eq!(
                flip_set_slice(&image),
                flips,
                "flip set is an orbit invariant"
            );
        }
        if is_distinguished_slice(w, &flips) {
            let size = 1u64 << flips.len();
            size_total += size;
            records.push(OrbitRecord {
                rep: perm,
                flip_indices: flips.into_iter().collect(),
                size,
            });
        }
        Ok(())
    })?;
    assert_eq!(member_total, size_total, "orbit sizes partition the class");
    Ok(records)
}

/// Exhaustive counts of class members and orbits at one n, refined by
/// flip-set size.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlipCensus {
    pub n: usize,
    pub members: u64,
    pub orbit_count: u64,
    /// P_{n,j}: members whose orbit has size 2^j, indexed by j.
    pub members_by_flip_size: Vec<u64>,
    /// O_{n,j}: orbits of size 2^j, indexed by j.
    pub orbits_by_flip_size: Vec<u64>,
}

struct ShardOut {
    members_by: Vec<u64>,
    orbits_by: Vec<u64>,
    violation: Option<ActionError>,
}

fn census_shard(class: &PermClass, n: usize, first: u32) -> ShardOut {
    let mut out = ShardOut {
        members_by: vec![0; n.max(1)],
        orbits_by: vec![0; n.max(1)],
        violation: None,
    };
    if n == 0 {
        if class.contains(&Permutation::from_slice_validated(&[])) {
            out.members_by[0] += 1;
            out.orbits_by[0] += 1;
        }
        return out;
    }
    let mut vals: Vec<u32> = std::iter::once(first)
        .chain((1..=n as u32).filter(|&v| v != first))
        .collect();
    loop {
        let perm = Permutation::from_slice_validated(&vals);
        if class.contains(&perm) {
            let flips = flip_set_slice(&vals);
            if out.violation.is_none() {
                for &i in &flips {
                    let image = flip_slice(&vals, i);
                    if !class.contains(&Permutation::from_slice_validated(&image)) {
                        out.violation = Some(ActionError::NotFlipClosed {
                            class: class.name().to_owned(),
                            n,
                            from: perm.to_string(),
                            flip: i,
                            to: Permutation::from_slice_validated(&image).to_string(),
                        });
                        break;
                    }
                }
            }
            out.members_by[flips.len()] += 1;
            if is_distinguished_slice(&vals, &flips) {
                out.orbits_by[flips.len()] += 1;
            }
        }
        if !next_permutation(&mut vals[1..]) {
            return out;
        }
    }
}

/// Count members and orbits of the class inside S_n, sharded by first
/// letter across at most `threads` worker threads. The result does not
/// depend on the thread count.
pub fn orbit_census(
    class: &PermClass,
    n: usize,
    threads: usize,
) -> Result<FlipCensus, ActionError> {
    let shards: Vec<ShardOut> = if n == 0 {
        vec![census_shard(class, 0, 0)]
    } else {
        let threads = threads.max(1).min(n);
        if threads == 1 {
            (1..=n as u32).map(|f| census_shard(class, n, f)).collect()
        } else {
            std::thread::scope(|scope| {
                let workers: Vec<_> = (0..threads)
                    .map(|t| {
                        scope.spawn(move || {
                            (1..=n as u32)
                                .filter(|f| (*f as usize - 1) % threads == t)
                                .map(|f| (f, census_shard(class, n, f)))
                                .collect::<Vec<_>>()
                        })
                    })
                    .collect();
                let mut tagged: Vec<(u32, ShardOut)> = workers
                    .into_iter()
                    .flat_map(|w| w.join().expect("census worker panicked"))
                    .collect();
                tagged.sort_by_key(|(f, _)| *f);
                tagged.into_iter().map(|(_, s)| s).collect()
            })
        }
    };
    let mut census = FlipCensus {
        n,
        members: 0,
        orbit_count: 0,
        members_by_flip_size: vec![0; n.max(1)],
        orbits_by_flip_size: vec![0; n.max(1)],
    };
    for shard in shards {
        if let Some(err) = shard.violation {
            return Err(err);
        }
        for j in 0..census.members_by_flip_size.len() {
            census.members_by_flip_size[j] += shard.members_by[j];
            census.orbits_by_flip_size[j] += shard.orbits_by[j];
        }
    }
    census.members = census.members_by_flip_size.iter().sum();
    census.orbit_count = census.orbits_by_flip_size.iter().sum();
    for j in 0..census.members_by_flip_size.len() {
        assert_eq!(
            census.members_by_flip_size[j],
            census.orbits_by_flip_size[j] << j,
            "every orbit with |I| = j has exactly 2^j members"
        );
    }
    Ok(census)
}

/// Brute-force and closed-form orbit generating functions, verified against
/// each other up to x^N.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitSeries {
    /// P(x): class members by size.
    pub p: UniSeries,
    /// O(x): orbits by size; equals P/(1+P).
    pub o: UniSeries,
    /// P(x,y) with y marking log2 of the orbit size; equals P/(1-2(y-1)P).
    pub pxy: BiSeries,
    /// O(x,y); equals P/(1-(y-2)P).
    pub oxy: BiSeries,
}

/// Count members and orbits for n = 1..=n_max and package the generating
/// functions. The closed-form identities for the orbit counts are computed
/// from the raw P series and asserted to agree with the brute-force counts.
pub fn orbit_series(
    class: &PermClass,
    n_max: usize,
    threads: usize,
) -> Result<OrbitSeries, ActionError> {
    let mut p_coeffs = vec![BigInt::from(0); n_max + 1];
    let mut o_coeffs = vec![BigInt::from(0); n_max + 1];
    let mut pxy_coeffs = vec![YPoly::zero(); n_max + 1];
    let mut oxy_coeffs = vec![YPoly::zero(); n_max + 1];
    for n in 1..=n_max {
        let census = orbit_census(class, n, threads)?;
        p_coeffs[n] = census.members.into();
        o_coeffs[n] = census.orbit_count.into();
        pxy_coeffs[n] = YPoly::from_coeffs(
            census
                .members_by_flip_size
                .iter()
                .map(|&c| BigInt::from(c))
                .collect(),
        );
        oxy_coeffs[n] = YPoly::from_coeffs(
            census
                .orbits_by_flip_size
                .iter()
                .map(|&c| BigInt::from(c))
                .collect(),
        );
    }
    let p = UniSeries::from_coeffs(p_coeffs);
    let o = UniSeries::from_coeffs(o_coeffs);
    let pxy = BiSeries::from_coeffs(pxy_coeffs);
    let oxy = BiSeries::from_coeffs(oxy_coeffs);

    let one_plus_p = UniSeries::one(n_max).add(&p);
    assert_eq!(o, p.div(&one_plus_p), "O(x) = P(x)/(1+P(x))");

    let p_bi = BiSeries::from_uni(&p);
    let two_y_minus_two = YPoly::from_i64(&[-2, 2]);
    let pxy_closed = p_bi.div(&BiSeries::one(n_max).sub(&p_bi.scale_y(&two_y_minus_two)));
    assert_eq!(pxy, pxy_closed, "P(x,y) = P(x)/(1-2(y-1)P(x))");

    let y_minus_two = YPoly::from_i64(&[-2, 1]);
    let oxy_closed = p_bi.div(&BiSeries::one(n_max).sub(&p_bi.scale_y(&y_minus_two)));
    assert_eq!(oxy, oxy_closed, "O(x,y) = P(x)/(1-(y-2)P(x))");

    Ok(OrbitSeries { p, o, pxy, oxy })
}

/// Why a class fails to be compatible with the restricted action.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Incompatibility {
    pub n: usize,
    pub member: Permutation,
    pub letter: u32,
    pub reason: IncompatReason,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IncompatReason {
    FlipLeavesClass { image: Permutation },
    BlockPatternLeavesClass { pattern: Permutation },
    OuterPatternLeavesClass { pattern: Permutation },
}

impl std::fmt::Display for Incompatibility {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "at n={}, member {} with letter {}: ",
            self.n, self.member, self.letter
        )?;
        match &self.reason {
            IncompatReason::FlipLeavesClass { image } => {
                write!(f, "flip image {image} leaves the class")
            }
            IncompatReason::BlockPatternLeavesClass { pattern } => {
                write!(f, "pattern {pattern} of the block w2 leaves the class")
            }
            IncompatReason::OuterPatternLeavesClass { pattern } => {
                write!(f, "pattern {pattern} of w1w3 leaves the class")
            }
        }
    }
}

fn pattern_of_letters(letters: &[u32]) -> Permutation {
    let mut order: Vec<usize> = (0..letters.len()).collect();
    order.sort_by_key(|&i| letters[i]);
    let mut values = vec![0u32; letters.len()];
    for (rank, &i) in order.iter().enumerate() {
        values[i] = rank as u32 + 1;
    }
    Permutation::from_slice_validated(&values)
}

/// Verify compatibility with the restricted action for all n <= n_max: every
/// flip image stays in the class, and for every x-decomposition the patterns
/// of w2 and of w1w3 belong to the class. Returns the first counterexample.
pub fn check_compatible(class: &PermClass, n_max: usize) -> Result<(), Incompatibility> {
    for n in 1..=n_max {
        each_permutation(n, |w| {
            let perm = Permutation::from_slice_validated(w);
            if !class.contains(&perm) {
                return Ok(());
            }
            for x in 1..=n as u32 {
                let Some((lo, hi)) = block_bounds(w, x) else {
                    continue;
                };
                let image = Permutation::from_slice_validated(&flip_slice(w, x));
                if !class.contains(&image) {
                    return Err(Incompatibility {
                        n,
                        member: perm,
                        letter: x,
                        reason: IncompatReason::FlipLeavesClass { image },
                    });
                }
                let block = pattern_of_letters(&w[lo..=hi]);
                if !class.contains(&block) {
                    return Err(Incompatibility {
                        n,
                        member: perm,
                        letter: x,
                        reason: IncompatReason::BlockPatternLeavesClass { pattern: block },
                    });
                }
                let outer: Vec<u32> = w[..lo].iter().chain(&w[hi + 1..]).copied().collect();
                if !outer.is_empty() {
                    let outer = pattern_of_letters(&outer);
                    if !class.contains(&outer) {
                        return Err(Incompatibility {
                            n,
                            member: perm,
                            letter: x,
                            reason: IncompatReason::OuterPatternLeavesClass { pattern: outer },
                        });
                    }
                }
            }
            Ok(())
        })?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(values: &[u32]) -> Permutation {
        Permutation::new(values.to_vec()).unwrap()
    }

    #[test]
    fn x_decompose_examples() {
        let d = x_decompose(&perm(&[1, 2, 3]), 2).unwrap().unwrap();
        assert_eq!(d.prefix, vec![1]);
        assert_eq!(d.block, vec![2, 3]);
        assert_eq!(d.suffix, Vec::<u32>::new());

        // The maximum always decomposes trivially.
        let d = x_decompose(&perm(&[3, 1, 4, 2]), 4).unwrap().unwrap();
        assert_eq!(d.block, vec![4]);

        assert_eq!(x_decompose(&perm(&[3, 1, 2]), 2).unwrap(), None);
        assert!(matches!(
            x_decompose(&perm(&[1, 2]), 5),
            Err(ActionError::UnknownLetter { .. })
        ));
    }

    #[test]
    fn flip_examples() {
        assert_eq!(flip(&perm(&[1, 2, 3]), 2), perm(&[1, 3, 2]));
        assert_eq!(flip(&perm(&[1, 2, 3]), 3), perm(&[1, 2, 3]));
        assert_eq!(flip(&perm(&[3, 1, 2]), 2), perm(&[3, 1, 2]));
        // Involution.
        for w in [[1, 2, 3], [2, 1, 3], [3, 2, 1]] {
            let w = perm(&w);
            for x in 1..=3 {
                assert_eq!(flip(&flip(&w, x), x), w);
            }
        }
    }

    #[test]
    fn flip_set_examples() {
        assert_eq!(flip_set(&perm(&[1, 2, 3])), [1, 2].into_iter().collect());
        assert!(flip_set(&perm(&[2, 1, 3])).is_empty());
        assert!(flip_set(&perm(&[3, 1, 2])).is_empty());
    }

    #[test]
    fn orbits_short_csp_s3() {
        let records = orbits(&PermClass::short_csp(), 3).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].rep, perm(&[1, 2, 3]));
        assert_eq!(records[0].flip_indices, [1, 2].into_iter().collect());
        assert_eq!(records[0].size, 4);
        let members = records[0].members();
        assert_eq!(
            members,
            vec![
                perm(&[1, 2, 3]),
                perm(&[1, 3, 2]),
                perm(&[2, 3, 1]),
                perm(&[3, 2, 1])
            ]
        );
        assert_eq!(records[1].rep, perm(&[2, 1, 3]));
        assert_eq!(records[1].size, 1);
    }

    #[test]
    fn orbits_all_s3() {
        let records = orbits(&PermClass::all(), 3).unwrap();
        assert_eq!(records.len(), 3);
    }

    #[test]
    fn orbit_counts_match_fuss_catalan_shift() {
        use crate::lattice::fuss_catalan;
        for n in 1..=6 {
            let records = orbits(&PermClass::short_csp(), n).unwrap();
            assert_eq!(
                num_bigint::BigUint::from(records.len()),
                fuss_catalan(n as u64 - 1, 2),
                "n={n}"
            );
        }
    }

    #[test]
    fn census_is_thread_count_independent() {
        for class in [PermClass::all(), PermClass::short_csp()] {
            let sequential = orbit_census(&class, 6, 1).unwrap();
            let parallel = orbit_census(&class, 6, 4).unwrap();
            assert_eq!(sequential, parallel);
        }
    }

    #[test]
    fn orbits_reject_non_closed_class() {
        let identity_only = PermClass::new("identity-only", |p: &Permutation| {
            p.values().windows(2).all(|w| w[0] < w[1])
        });
        let err = orbits(&identity_only, 3).unwrap_err();
        assert!(matches!(err, ActionError::NotFlipClosed { .. }));
    }

    #[test]
    fn check_compatible_examples() {
        assert!(check_compatible(&PermClass::all(), 5).is_ok());
        assert!(check_compatible(&PermClass::short_csp(), 5).is_ok());
        let identity_only = PermClass::new("identity-only", |p: &Permutation| {
            p.values().windows(2).all(|w| w[0] < w[1])
        });
        // First counterexample in scan order: flip(12, 1) = 21 at n = 2.
        let failure = check_compatible(&identity_only, 3).unwrap_err();
        assert_eq!(failure.n, 2);
        assert_eq!(failure.member, perm(&[1, 2]));
        assert_eq!(
            failure.reason,
            IncompatReason::FlipLeavesClass {
                image: perm(&[2, 1])
            }
        );
    }

    #[test]
    fn orbit_record_json_schema() {
        let records = orbits(&PermClass::short_csp(), 3).unwrap();
        let json = serde_json::to_string(&records[0]).unwrap();
        assert_eq!(json, r#"{"rep":[1,2,3],"I":[1,2],"size":4}"#);
        let back: OrbitRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, records[0]);
    }
}
