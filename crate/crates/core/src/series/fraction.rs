//! Continued-fraction forms of the k = 2 type generating function.
//!
//! T_2(x_1..x_r) equals the nested fraction 1/(1/x_1 - 1/(1/x_2 - ...)) and,
//! in the limit, Flajolet's form x_1/(1 - x_1 x_2/(1 - x_2 x_3/(1 - ...))).
//! Both are expanded here as exact truncated series for cross-checking
//! against the rational Q_2 form.

use super::multipoly::MultiPoly;
use super::truncated::TruncatedMultiSeries;

/// Expand 1/(1/x_1 - 1/(1/x_2 - ... - 1/(1/x_r))) to total degree `trunc`.
/// Equals `t_series(2, r, trunc)`.
pub fn continued_fraction_t2(r: usize, trunc: u32) -> TruncatedMultiSeries {
    assert!(r >= 1, "at least one variable is required");
    // Build the fraction bottom-up as an exact rational function N/D:
    // R_r = x_r / 1 and R_j = 1/(1/x_j - R_{j+1}) = x_j D_{j+1} / (D_{j+1} - x_j N_{j+1}).
    let mut num = MultiPoly::var(r, r);
    let mut den = MultiPoly::one(r);
    for j in (1..r).rev() {
        let xj = MultiPoly::var(r, j);
        let new_num = &xj * &den;
        let new_den = &den - &(&xj * &num);
        num = new_num;
        den = new_den;
    }
    TruncatedMultiSeries::new(num, trunc).div(&TruncatedMultiSeries::new(den, trunc))
}

/// Expand x_1/(1 - x_1 x_2/(1 - x_2 x_3/(1 - ...))) with nesting depth
/// `trunc` to total degree `trunc`. Any monomial touching a variable past
/// x_trunc has total degree > trunc, so this depth is exact; the result
/// equals `t_series(2, trunc, trunc)`.
pub fn flajolet_series(trunc: u32) -> TruncatedMultiSeries {
    let depth = (trunc as usize).max(1);
    // G_depth = 1 and G_j = 1/(1 - x_j x_{j+1} G_{j+1}); result is x_1 G_1.
    let mut num = MultiPoly::one(depth);
    let mut den = MultiPoly::one(depth);
    for j in (1..depth).rev() {
        let product = &(&MultiPoly::var(depth, j) * &MultiPoly::var(depth, j + 1)) * &num;
        let new_num = den.clone();
        let new_den = &den - &product;
        num = new_num;
        den = new_den;
    }
    let top = &MultiPoly::var(depth, 1) * &num;
    TruncatedMultiSeries::new(top, trunc).div(&TruncatedMultiSeries::new(den, trunc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::types::t_series;

    #[test]
    fn single_variable_is_x1() {
        let cf = continued_fraction_t2(1, 5);
        assert_eq!(cf.coeff(&[1]), 1.into());
        assert_eq!(cf.poly().num_terms(), 1);
        let fl = flajolet_series(1);
        assert_eq!(fl.coeff(&[1]), 1.into());
        assert_eq!(fl.poly().num_terms(), 1);
    }

    #[test]
    fn two_variables_is_geometric() {
        let cf = continued_fraction_t2(2, 5);
        assert_eq!(cf.coeff(&[1, 0]), 1.into());
        assert_eq!(cf.coeff(&[2, 1]), 1.into());
        assert_eq!(cf.coeff(&[3, 2]), 1.into());
        assert_eq!(cf, t_series(2, 2, 5));
    }

    #[test]
    fn flajolet_low_degree_terms() {
        let fl = flajolet_series(5);
        assert_eq!(fl.coeff(&[1, 0, 0, 0, 0]), 1.into());
        assert_eq!(fl.coeff(&[2, 1, 0, 0, 0]), 1.into());
        assert_eq!(fl.coeff(&[3, 2, 0, 0, 0]), 1.into());
        assert_eq!(fl.coeff(&[2, 2, 1, 0, 0]), 1.into());
        assert_eq!(flajolet_series(3), t_series(2, 3, 3));
    }
}
