//! Exact-arithmetic toolkit for k-Catalan lattice paths and the permutation
//! families attached to them.
//!
//! - [`lattice`]: k-Catalan paths, bridges, exhaustive enumeration, and the
//!   cyclic-shift statistics (above-axis steps, up-steps below the axis,
//!   positive partial sums of integer and rational vectors).
//! - [`spitzer`]: the tilt transform, full and short Catalan-Spitzer
//!   permutations, path types, and path reconstruction from a short
//!   permutation.
//! - [`fstree`]: Foata-Strehl trees, levels, rl-words, levelwise numbering,
//!   and the right-chain divisibility condition.
//! - [`series`]: exact multivariate polynomial and truncated-series
//!   arithmetic, type-counting recurrences, k-continuants, and
//!   continued-fraction expansions.
//! - [`action`]: x-decompositions, x-flips, the restricted Foata-Strehl
//!   group action, orbit enumeration and orbit generating functions.
//!
//! All arithmetic is exact: big integers for counts and coefficients, big
//! rationals where fractions occur. Floating point appears only in the one
//! numeric root-of-unity cross-check that is explicitly specified as such.

pub mod action;
pub mod fstree;
pub mod lattice;
pub mod series;
pub mod spitzer;
