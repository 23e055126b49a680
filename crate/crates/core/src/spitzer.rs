//! The tilt transform and the Catalan-Spitzer permutations it induces.
//!
//! Tilting an augmented k-Catalan path of order n turns the heights
//! z_1, ..., z_{kn+1} into the pairwise distinct values
//! z'_i = ((kn+1) z_i - i) / k, all positive except the final z'_{kn+1} = 0.
//! The *full* Catalan-Spitzer permutation records the relative order of all
//! kn+1 values (the endpoint is always labeled 1); the *short* one records
//! the relative order at the ascent positions only, or equivalently labels
//! the up steps of the un-augmented path right-to-left within a level and
//! bottom-to-top across levels. The short permutation determines the path:
//! [`reconstruct`] inverts [`short_csp`] via the Foata-Strehl tree levels.

use std::collections::BTreeSet;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::fstree::FsTree;
use crate::lattice::{LatticePath, PathError, PathKind, Step};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("values are not a rearrangement of 1..={len}")]
    NotAPermutation { len: usize },
    #[error("word contains the letter {letter} twice")]
    RepeatedLetter { letter: i64 },
}

/// A permutation of {1, ..., m} in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Permutation, PermError> {
        let len = values.len();
        let mut seen = vec![false; len];
        for &v in &values {
            if v == 0 || v as usize > len || seen[v as usize - 1] {
                return Err(PermError::NotAPermutation { len });
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { values })
    }

    pub(crate) fn from_slice_validated(values: &[u32]) -> Permutation {
        debug_assert!(Permutation::new(values.to_vec()).is_ok());
        Permutation {
            values: values.to_vec(),
        }
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// The letters as an i64 word, e.g. for building a Foata-Strehl tree.
    pub fn as_word(&self) -> Vec<i64> {
        self.values.iter().map(|&v| i64::from(v)).collect()
    }

    /// 0-based position of a letter, if present.
    pub fn position_of(&self, letter: u32) -> Option<usize> {
        self.values.iter().position(|&v| v == letter)
    }

    /// Parse comma-separated one-line notation, e.g. `2,4,7,1,3,6,8,9,5`.
    pub fn parse(text: &str) -> Result<Permutation, PermError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Permutation { values: Vec::new() });
        }
        let values = trimmed
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PermError::NotAPermutation { len: 0 })?;
        Permutation::new(values)
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let values = Vec::<u32>::deserialize(deserializer)?;
        Permutation::new(values).map_err(D::Error::custom)
    }
}

/// The tilted heights z'_1, ..., z'_{kn+1} of an augmented path. The values
/// are integers: (kn+1) z_i - i is always divisible by k.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpitzerCoordinates {
    k: u32,
    order: usize,
    values: Vec<i64>,
}

impl SpitzerCoordinates {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

/// Tilt an augmented path: z'_i = ((kn+1) z_i - i) / k.
pub fn tilt(aug: &LatticePath) -> Result<SpitzerCoordinates, PathError> {
    if aug.kind() != PathKind::Augmented {
        return Err(PathError::WrongKind {
            expected: PathKind::Augmented,
            found: aug.kind(),
        });
    }
    let k = i64::from(aug.k());
    let order = aug.order();
    let m = aug.len() as i64; // kn + 1
    let values: Vec<i64> = aug
        .heights()
        .iter()
        .enumerate()
        .map(|(idx, &z)| {
            let i = idx as i64 + 1;
            let numerator = m * z - i;
            debug_assert_eq!(numerator % k, 0, "tilted heights are integers");
            numerator / k
        })
        .collect();
    debug_assert_eq!(values.last(), Some(&0));
    Ok(SpitzerCoordinates {
        k: aug.k(),
        order,
        values,
    })
}

/// The full k-Catalan-Spitzer permutation of an augmented path: position i
/// carries the rank of z'_i (rank 1 = smallest). Always ends with 1.
pub fn full_csp(aug: &LatticePath) -> Result<Permutation, PathError> {
    let coords = tilt(aug)?;
    Ok(ranks(coords.values()))
}

fn ranks(values: &[i64]) -> Permutation {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by_key(|&i| values[i]);
    let mut perm = vec![0u32; values.len()];
    for (rank, &i) in order.iter().enumerate() {
        perm[i] = rank as u32 + 1;
    }
    Permutation { values: perm }
}

/// Ascent positions {i : p(i) < p(i+1)}, 1-based.
pub fn ascent_set(p: &Permutation) -> BTreeSet<usize> {
    p.values()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] < w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

/// The pattern of a distinct-letter word: the order-isomorphic permutation
/// of {1, ..., len}.
pub fn pattern(word: &[i64]) -> Result<Permutation, PermError> {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| word[i]);
    for pair in order.windows(2) {
        if word[pair[0]] == word[pair[1]] {
            return Err(PermError::RepeatedLetter {
                letter: word[pair[0]],
            });
        }
    }
    let mut perm = vec![0u32; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        perm[i] = rank as u32 + 1;
    }
    Ok(Permutation { values: perm })
}

/// The short k-Catalan-Spitzer permutation of a Catalan path: up steps are
/// labeled bottom-to-top across levels and right-to-left within a level
/// (level = start height), then read off along the path.
pub fn short_csp(path: &LatticePath) -> Result<Permutation, PathError> {
    if path.kind() != PathKind::Catalan {
        return Err(PathError::WrongKind {
            expected: PathKind::Catalan,
            found: path.kind(),
        });
    }
    let drop = i64::from(path.k()) - 1;
    let mut ups: Vec<(i64, usize)> = Vec::new(); // (start height, position)
    let mut h = 0i64;
    for (pos, s) in path.steps().iter().enumerate() {
        if *s == Step::Up {
            ups.push((h, pos));
            h += 1;
        } else {
            h -= drop;
        }
    }
    let mut order: Vec<usize> = (0..ups.len()).collect();
    order.sort_by(|&a, &b| ups[a].0.cmp(&ups[b].0).then(ups[b].1.cmp(&ups[a].1)));
    let mut labels = vec![0u32; ups.len()];
    for (rank, &i) in order.iter().enumerate() {
        labels[i] = rank as u32 + 1;
    }
    Ok(Permutation { values: labels })
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ReconstructError {
    #[error("the Foata-Strehl tree of the permutation is not levelwise numbered")]
    NotLevelwise,
    #[error(
        "level gap {gap} after position {position} is not a nonnegative multiple of k-1={modulus}"
    )]
    LevelGap {
        position: usize,
        gap: i64,
        modulus: i64,
    },
}

/// Rebuild the unique Catalan path whose short permutation is `short`.
///
/// One up step is emitted per letter; between letters s(i) and s(i+1) the
/// number of down steps d satisfies d (k-1) = level(s(i)) + 1 - level(s(i+1))
/// where levels come from the Foata-Strehl tree, and after the last letter
/// d (k-1) = level(s(n)) + 1.
pub fn reconstruct(short: &Permutation, k: u32) -> Result<LatticePath, ReconstructError> {
    assert!(k >= 2, "k must be at least 2");
    if short.is_empty() {
        return Ok(LatticePath::new(k, PathKind::Catalan, Vec::new())
            .expect("empty path is a valid Catalan path"));
    }
    let word = short.as_word();
    let tree = FsTree::build(&word).expect("permutation letters are distinct");
    if !tree
        .is_levelwise_numbered()
        .expect("permutation labels are 1..=n")
    {
        return Err(ReconstructError::NotLevelwise);
    }
    let levels = tree.levels();
    let modulus = i64::from(k) - 1;
    let mut steps = Vec::new();
    for (i, &letter) in word.iter().enumerate() {
        steps.push(Step::Up);
        let here = levels[&letter] as i64;
        let next = word.get(i + 1).map_or(0, |l| levels[l] as i64);
        let gap = here + 1 - next;
        if gap < 0 || gap % modulus != 0 {
            return Err(ReconstructError::LevelGap {
                position: i + 1,
                gap,
                modulus,
            });
        }
        for _ in 0..gap / modulus {
            steps.push(Step::Down);
        }
    }
    Ok(LatticePath::new(k, PathKind::Catalan, steps)
        .expect("level gaps guarantee a valid Catalan path"))
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TypeVectorError {
    #[error("a type vector must have i_1 >= 1")]
    LeadingZero,
}

/// Per-level lattice point counts (i_1, ..., i_r) of an augmented path, in
/// canonical form: trailing zeros stripped, i_1 >= 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TypeVector {
    counts: Vec<u64>,
}

impl TypeVector {
    pub fn new(mut counts: Vec<u64>) -> Result<TypeVector, TypeVectorError> {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        if counts.first().is_none_or(|&c| c == 0) {
            return Err(TypeVectorError::LeadingZero);
        }
        Ok(TypeVector { counts })
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Number of levels r.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total number of lattice points (= kn+1 for the owning path).
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

impl std::fmt::Display for TypeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", text.join(","))
    }
}

impl Serialize for TypeVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.counts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TypeVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let counts = Vec::<u64>::deserialize(deserializer)?;
        TypeVector::new(counts).map_err(D::Error::custom)
    }
}

/// The type of an augmented path: how many of its kn+1 lattice points
/// (endpoint included) sit at each level j >= 1.
pub fn path_type(aug: &LatticePath) -> Result<TypeVector, PathError> {
    if aug.kind() != PathKind::Augmented {
        return Err(PathError::WrongKind {
            expected: PathKind::Augmented,
            found: aug.kind(),
        });
    }
    let mut counts: Vec<u64> = Vec::new();
    for z in aug.heights() {
        debug_assert!(z >= 1);
        let level = z as usize;
        if counts.len() < level {
            counts.resize(level, 0);
        }
        counts[level - 1] += 1;
    }
    Ok(TypeVector::new(counts).expect("an augmented path has a point at level 1"))
}
