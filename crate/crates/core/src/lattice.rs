//! k-Catalan lattice paths, bridges, enumeration and cyclic-shift statistics.
//!
//! A path is a word over two steps: `Up` with displacement (1,1) and `Down`
//! with displacement (1,1-k) for a fixed parameter k >= 2. Three kinds are
//! distinguished:
//!
//! - `Catalan`: (k-1)n up steps and n down steps, never below the x-axis,
//!   ending on it;
//! - `Augmented`: a Catalan path with one extra leading up step; stays at
//!   height >= 1 after the first step and ends at height 1;
//! - `Bridge`: same step counts as a Catalan path, ending on the axis, with
//!   no sign constraint.
//!
//! The module also houses the statistics behind the Chung-Feller theorem and
//! its Huq/Spitzer generalizations: positive partial sums of cyclic shifts of
//! integer (sum 1) and rational (sum 0) vectors, and the tilt functional
//! F(u,w) = w - u/m that linearly orders the lattice points of the path
//! associated with an integer vector.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A single step. `Up` sorts before `Down`; enumeration order relies on this.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn to_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }

    pub fn from_char(c: char) -> Result<Step, PathError> {
        match c {
            'U' | 'u' => Ok(Step::Up),
            'D' | 'd' => Ok(Step::Down),
            other => Err(PathError::BadStepChar { found: other }),
        }
    }
}

/// Which invariants a path is expected to satisfy.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathKind {
    Catalan,
    Augmented,
    Bridge,
}

impl std::fmt::Display for PathKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            PathKind::Catalan => "catalan",
            PathKind::Augmented => "augmented",
            PathKind::Bridge => "bridge",
        };
        f.write_str(s)
    }
}

/// Errors raised when constructing or consuming lattice paths.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("path parameter k must be at least 2, got {k}")]
    ParameterTooSmall { k: u32 },
    #[error("invalid step character {found:?}; expected 'U' or 'D'")]
    BadStepChar { found: char },
    #[error(
        "{kind} path with k={k} needs {expected_ups} up steps for {downs} down steps, got {ups}"
    )]
    StepCountMismatch {
        kind: PathKind,
        k: u32,
        ups: usize,
        downs: usize,
        expected_ups: usize,
    },
    #[error("catalan path drops below the x-axis after step {position}")]
    BelowAxis { position: usize },
    #[error("augmented path must start with an up step")]
    MissingLeadingUp,
    #[error("augmented path drops below y=1 after step {position}")]
    BelowOne { position: usize },
    #[error("expected a {expected} path, got a {found} path")]
    WrongKind { expected: PathKind, found: PathKind },
    #[error("the above-axis statistic is only defined for k=2, got k={k}")]
    AboveAxisNeedsKTwo { k: u32 },
}

/// A lattice path over the step set {(1,1), (1,1-k)}.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticePath {
    k: u32,
    kind: PathKind,
    steps: Vec<Step>,
}

impl LatticePath {
    /// Validate `steps` against the invariants of `kind` and wrap them.
    pub fn new(k: u32, kind: PathKind, steps: Vec<Step>) -> Result<LatticePath, PathError> {
        if k < 2 {
            return Err(PathError::ParameterTooSmall { k });
        }
        let drop = i64::from(k) - 1;
        let ups = steps.iter().filter(|s| **s == Step::Up).count();
        let downs = steps.len() - ups;
        let expected_ups = match kind {
            PathKind::Catalan | PathKind::Bridge => (k as usize - 1) * downs,
            PathKind::Augmented => (k as usize - 1) * downs + 1,
        };
        if ups != expected_ups {
            return Err(PathError::StepCountMismatch {
                kind,
                k,
                ups,
                downs,
                expected_ups,
            });
        }
        match kind {
            PathKind::Catalan => {
                let mut h = 0i64;
                for (i, s) in steps.iter().enumerate() {
                    h += if *s == Step::Up { 1 } else { -drop };
                    if h < 0 {
                        return Err(PathError::BelowAxis { position: i + 1 });
                    }
                }
            }
            PathKind::Augmented => {
                if steps.first() != Some(&Step::Up) {
                    return Err(PathError::MissingLeadingUp);
                }
                let mut h = 1i64;
                for (i, s) in steps.iter().enumerate().skip(1) {
                    h += if *s == Step::Up { 1 } else { -drop };
                    if h < 1 {
                        return Err(PathError::BelowOne { position: i + 1 });
                    }
                }
            }
            PathKind::Bridge => {}
        }
        Ok(LatticePath { k, kind, steps })
    }

    /// Parse a path from a `U`/`D` string.
    pub fn parse(k: u32, kind: PathKind, text: &str) -> Result<LatticePath, PathError> {
        let steps = text
            .chars()
            .map(Step::from_char)
            .collect::<Result<Vec<_>, _>>()?;
        LatticePath::new(k, kind, steps)
    }

    /// Construct without re-validating. Callers must guarantee the invariants.
    pub(crate) fn new_unchecked(k: u32, kind: PathKind, steps: Vec<Step>) -> LatticePath {
        debug_assert!(LatticePath::new(k, kind, steps.clone()).is_ok());
        LatticePath { k, kind, steps }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The order n, i.e. the number of down steps.
    pub fn order(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::Down).count()
    }

    /// Heights after each step (length = number of steps; start height 0 is
    /// not included).
    pub fn heights(&self) -> Vec<i64> {
        let drop = i64::from(self.k) - 1;
        let mut h = 0i64;
        self.steps
            .iter()
            .map(|s| {
                h += if *s == Step::Up { 1 } else { -drop };
                h
            })
            .collect()
    }

    pub fn steps_string(&self) -> String {
        self.steps.iter().map(|s| s.to_char()).collect()
    }

    /// Prepend an up step to a Catalan path, yielding an augmented path.
    pub fn augment(&self) -> Result<LatticePath, PathError> {
        if self.kind != PathKind::Catalan {
            return Err(PathError::WrongKind {
                expected: PathKind::Catalan,
                found: self.kind,
            });
        }
        let mut steps = Vec::with_capacity(self.steps.len() + 1);
        steps.push(Step::Up);
        steps.extend_from_slice(&self.steps);
        Ok(LatticePath::new_unchecked(
            self.k,
            PathKind::Augmented,
            steps,
        ))
    }

    /// Remove the leading up step of an augmented path, recovering the
    /// Catalan path it came from.
    pub fn strip_augmentation(&self) -> Result<LatticePath, PathError> {
        if self.kind != PathKind::Augmented {
            return Err(PathError::WrongKind {
                expected: PathKind::Augmented,
                found: self.kind,
            });
        }
        Ok(LatticePath::new_unchecked(
            self.k,
            PathKind::Catalan,
            self.steps[1..].to_vec(),
        ))
    }
}

impl std::fmt::Display for LatticePath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.steps_string())
    }
}

impl Serialize for LatticePath {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            k: u32,
            kind: PathKind,
            steps: &'a str,
        }
        Repr {
            k: self.k,
            kind: self.kind,
            steps: &self.steps_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LatticePath {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            k: u32,
            kind: PathKind,
            steps: String,
        }
        let repr = Repr::deserialize(deserializer)?;
        LatticePath::parse(repr.k, repr.kind, &repr.steps).map_err(D::Error::custom)
    }
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for i in 1..=k {
        result = result * BigUint::from(n - k + i) / BigUint::from(i);
    }
    result
}

/// The Fuss-Catalan number C_{n,k} = binom(kn+1, n) / (kn+1).
pub fn fuss_catalan(n: u64, k: u32) -> BigUint {
    let m = u64::from(k) * n + 1;
    let binom = binomial(m, n);
    debug_assert!(
        (&binom % BigUint::from(m)).is_zero(),
        "binom(kn+1, n) is always divisible by kn+1"
    );
    binom / BigUint::from(m)
}

enum EnumState {
    NotStarted,
    Running,
    Done,
}

/// Deterministic lexicographic enumerator (`Up` < `Down`) for Catalan paths
/// and bridges of a fixed order.
pub struct PathEnumerator {
    k: u32,
    kind: PathKind,
    nonneg: bool,
    total: usize,
    ups_left: usize,
    downs_left: usize,
    height: i64,
    steps: Vec<Step>,
    state: EnumState,
}

impl PathEnumerator {
    fn new(n: usize, k: u32, kind: PathKind) -> PathEnumerator {
        assert!(k >= 2, "path parameter k must be at least 2");
        let ups = (k as usize - 1) * n;
        PathEnumerator {
            k,
            kind,
            nonneg: kind == PathKind::Catalan,
            total: ups + n,
            ups_left: ups,
            downs_left: n,
            height: 0,
            steps: Vec::with_capacity(ups + n),
            state: EnumState::NotStarted,
        }
    }

    fn drop(&self) -> i64 {
        i64::from(self.k) - 1
    }

    fn can_push(&self, step: Step) -> bool {
        match step {
            Step::Up => self.ups_left > 0,
            Step::Down => self.downs_left > 0 && (!self.nonneg || self.height >= self.drop()),
        }
    }

    fn push(&mut self, step: Step) {
        match step {
            Step::Up => {
                self.ups_left -= 1;
                self.height += 1;
            }
            Step::Down => {
                self.downs_left -= 1;
                self.height -= self.drop();
            }
        }
        self.steps.push(step);
    }

    fn pop(&mut self) -> Option<Step> {
        let step = self.steps.pop()?;
        match step {
            Step::Up => {
                self.ups_left += 1;
                self.height -= 1;
            }
            Step::Down => {
                self.downs_left += 1;
                self.height += self.drop();
            }
        }
        Some(step)
    }

    // After any legal placement the remainder can always be completed by
    // emitting all up steps first, so greedy extension never backtracks.
    fn fill_greedy(&mut self) {
        while self.steps.len() < self.total {
            if self.can_push(Step::Up) {
                self.push(Step::Up);
            } else {
                debug_assert!(self.can_push(Step::Down));
                self.push(Step::Down);
            }
        }
    }
}

impl Iterator for PathEnumerator {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        match self.state {
            EnumState::Done => return None,
            EnumState::NotStarted => {
                self.state = EnumState::Running;
                self.fill_greedy();
            }
            EnumState::Running => {
                let mut found = false;
                while let Some(step) = self.pop() {
                    if step == Step::Up && self.can_push(Step::Down) {
                        self.push(Step::Down);
                        self.fill_greedy();
                        found = true;
                        break;
                    }
                }
                if !found {
                    self.state = EnumState::Done;
                    return None;
                }
            }
        }
        Some(LatticePath::new_unchecked(
            self.k,
            self.kind,
            self.steps.clone(),
        ))
    }
}

/// All k-Catalan paths of order n in lexicographic step order (Up < Down).
pub fn enumerate_catalan(n: usize, k: u32) -> PathEnumerator {
    PathEnumerator::new(n, k, PathKind::Catalan)
}

/// All bridges of order n (same step counts, no sign constraint), in
/// lexicographic step order.
pub fn enumerate_bridges(n: usize, k: u32) -> PathEnumerator {
    PathEnumerator::new(n, k, PathKind::Bridge)
}

/// Number of steps of a k=2 bridge lying above the x-axis, using the
/// midpoint test y_start + y_end > 0. Always even.
pub fn steps_above_axis(path: &LatticePath) -> Result<usize, PathError> {
    if path.k() != 2 {
        return Err(PathError::AboveAxisNeedsKTwo { k: path.k() });
    }
    require_bridge_shape(path)?;
    let mut h = 0i64;
    let mut count = 0;
    for s in path.steps() {
        let next = h + if *s == Step::Up { 1 } else { -1 };
        if h + next > 0 {
            count += 1;
        }
        h = next;
    }
    Ok(count)
}

/// Number of up steps of a bridge that start strictly below the x-axis.
pub fn up_steps_below_axis(path: &LatticePath) -> Result<usize, PathError> {
    require_bridge_shape(path)?;
    let drop = i64::from(path.k()) - 1;
    let mut h = 0i64;
    let mut count = 0;
    for s in path.steps() {
        if *s == Step::Up {
            if h < 0 {
                count += 1;
            }
            h += 1;
        } else {
            h -= drop;
        }
    }
    Ok(count)
}

// Catalan paths are bridges too; only augmented paths (ending at height 1)
// are rejected.
fn require_bridge_shape(path: &LatticePath) -> Result<(), PathError> {
    if path.kind() == PathKind::Augmented {
        return Err(PathError::WrongKind {
            expected: PathKind::Bridge,
            found: path.kind(),
        });
    }
    Ok(())
}

/// Errors for the cyclic-shift statistics on integer and rational vectors.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CyclicError {
    #[error("vector must be nonempty")]
    Empty,
    #[error("entries must sum to 1, got {sum}")]
    SumNotOne { sum: i64 },
    #[error("entries must sum to 0, got {sum}")]
    SumNotZero { sum: String },
    #[error("cyclic window starting after index {start} of length {len} sums to zero")]
    VanishingWindow { start: usize, len: usize },
    #[error("shift {shift} out of range for a vector of length {len}")]
    ShiftOutOfRange { shift: usize, len: usize },
}

fn check_sum_one(v: &[i64]) -> Result<(), CyclicError> {
    if v.is_empty() {
        return Err(CyclicError::Empty);
    }
    let sum: i64 = v.iter().sum();
    if sum != 1 {
        return Err(CyclicError::SumNotOne { sum });
    }
    Ok(())
}

/// Number of positive partial sums y_{s+1} + ... + y_{s+l} over window
/// lengths 1 <= l <= m-1 of the cyclic shift starting after index `shift`.
///
/// The full window l = m always sums to 1 and is excluded; including it
/// would make the value 0 unreachable.
pub fn huq_statistic(v: &[i64], shift: usize) -> Result<usize, CyclicError> {
    check_sum_one(v)?;
    let m = v.len();
    if shift >= m {
        return Err(CyclicError::ShiftOutOfRange { shift, len: m });
    }
    let mut sum = 0i64;
    let mut count = 0;
    for l in 0..m - 1 {
        sum += v[(shift + l) % m];
        if sum > 0 {
            count += 1;
        }
    }
    Ok(count)
}

/// [`huq_statistic`] for every cyclic shift, in shift order 0, 1, ..., m-1.
/// As a set the result is always {0, 1, ..., m-1}.
pub fn huq_profile(v: &[i64]) -> Result<Vec<usize>, CyclicError> {
    (0..v.len().max(1)).map(|s| huq_statistic(v, s)).collect()
}

/// For a rational vector with total sum 0 and no vanishing proper cyclic
/// window sum, count the positive partial sums (window lengths 1..=m) of
/// every cyclic shift. As a set the result is always {0, 1, ..., m-1}.
pub fn spitzer_profile(x: &[BigRational]) -> Result<Vec<usize>, CyclicError> {
    if x.is_empty() {
        return Err(CyclicError::Empty);
    }
    let m = x.len();
    let total: BigRational = x.iter().sum();
    if !total.is_zero() {
        return Err(CyclicError::SumNotZero {
            sum: total.to_string(),
        });
    }
    for start in 0..m {
        let mut sum = BigRational::zero();
        for len in 1..m {
            sum += &x[(start + len - 1) % m];
            if sum.is_zero() {
                return Err(CyclicError::VanishingWindow { start, len });
            }
        }
    }
    let mut profile = Vec::with_capacity(m);
    for shift in 0..m {
        let mut sum = BigRational::zero();
        let mut count = 0;
        for l in 0..m {
            sum += &x[(shift + l) % m];
            if sum.is_positive() {
                count += 1;
            }
        }
        profile.push(count);
    }
    Ok(profile)
}

/// Lattice points (i, v_i), i = 0..m-1, of the path associated with an
/// integer vector summing to 1, sorted by the functional F(u,w) = w - u/m.
///
/// F values are pairwise distinct because the first coordinates differ by
/// less than m, so m*w - u decides exactly.
pub fn functional_order(v: &[i64]) -> Vec<(i64, i64)> {
    let m = v.len() as i64;
    let mut points = Vec::with_capacity(v.len());
    let mut height = 0i64;
    for i in 0..v.len() as i64 {
        points.push((i, height));
        if let Some(&y) = v.get(i as usize) {
            height += y;
        }
    }
    points.sort_by_key(|&(u, w)| m as i128 * w as i128 - u as i128);
    points
}
