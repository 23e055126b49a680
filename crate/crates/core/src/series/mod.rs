//! Exact series arithmetic and the generating functions of path types.
//!
//! - [`multipoly`]: sparse multivariate polynomials over the integers.
//! - [`truncated`]: total-degree-truncated multivariate series with
//!   division by unit-constant-term denominators.
//! - [`types`]: the t_k type-counting recurrence, Q_k denominator
//!   polynomials and the rational generating functions T_k.
//! - [`continuant`]: k-continuants (recurrence, matrix and block-deletion
//!   forms) plus the numeric root-of-unity bridge to Q_k.
//! - [`fraction`]: continued-fraction and Flajolet-style expansions of T_2.
//! - [`univariate`]: dense series in x (and in x with y-polynomial
//!   coefficients) for the orbit generating functions.

pub mod continuant;
pub mod fraction;
pub mod multipoly;
pub mod truncated;
pub mod types;
pub mod univariate;

pub use continuant::{
    block_deletion_expansion, continuant_eval_complex, continuant_eval_rational, continuant_matrix,
    continuant_ones, continuant_poly, q_vs_continuant_check, random_positive_rationals,
};
pub use fraction::{continued_fraction_t2, flajolet_series};
pub use multipoly::MultiPoly;
pub use truncated::TruncatedMultiSeries;
pub use types::{q_poly, q_poly_interval, t_series, type_count};
pub use univariate::{BiSeries, UniSeries, YPoly};
