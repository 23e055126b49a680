//! Dense univariate and bivariate truncated series over the integers.
//!
//! `UniSeries` holds coefficients c_0..c_N of a series in x; `BiSeries`
//! holds one integer polynomial in y per power of x. Both are exact and
//! support the division-by-unit needed for the orbit generating functions
//! (denominators always have constant term 1).

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// An integer polynomial in y, dense coefficients ascending, no trailing
/// zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct YPoly {
    coeffs: Vec<BigInt>,
}

impl YPoly {
    pub fn zero() -> YPoly {
        YPoly { coeffs: Vec::new() }
    }

    pub fn one() -> YPoly {
        YPoly::from_coeffs(vec![BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> YPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        YPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> YPoly {
        YPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of y^j.
    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, rhs: &YPoly) -> YPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        YPoly::from_coeffs((0..len).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }

    pub fn sub(&self, rhs: &YPoly) -> YPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        YPoly::from_coeffs((0..len).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }

    pub fn mul(&self, rhs: &YPoly) -> YPoly {
        if self.is_zero() || rhs.is_zero() {
            return YPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        YPoly::from_coeffs(coeffs)
    }

    /// Evaluate at an integer y.
    pub fn eval(&self, y: &BigInt) -> BigInt {
        let mut value = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            value = value * y + c;
        }
        value
    }
}

impl std::fmt::Display for YPoly {
    /// Descending powers, e.g. `y^5 + 4y^3 + 6y^2 + 13y + 18`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for j in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[j];
            if c.is_zero() {
                continue;
            }
            let magnitude = if c < &BigInt::zero() { -c } else { c.clone() };
            if first {
                if c < &BigInt::zero() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c < &BigInt::zero() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let show_coeff = !magnitude.is_one() || j == 0;
            if show_coeff {
                write!(f, "{magnitude}")?;
            }
            match j {
                0 => {}
                1 => f.write_str("y")?,
                _ => write!(f, "y^{j}")?,
            }
        }
        Ok(())
    }
}

/// Integer power series in x truncated after degree N (N+1 coefficients).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniSeries {
    coeffs: Vec<BigInt>,
}

impl UniSeries {
    pub fn zero(trunc: usize) -> UniSeries {
        UniSeries {
            coeffs: vec![BigInt::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> UniSeries {
        let mut s = UniSeries::zero(trunc);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Wrap coefficients c_0..c_N.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> UniSeries {
        assert!(!coeffs.is_empty());
        UniSeries { coeffs }
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn truncate_to(&self, trunc: usize) -> UniSeries {
        assert!(trunc <= self.trunc());
        UniSeries {
            coeffs: self.coeffs[..=trunc].to_vec(),
        }
    }

    pub fn add(&self, rhs: &UniSeries) -> UniSeries {
        let trunc = self.trunc().min(rhs.trunc());
        UniSeries {
            coeffs: (0..=trunc)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &UniSeries) -> UniSeries {
        let trunc = self.trunc().min(rhs.trunc());
        UniSeries {
            coeffs: (0..=trunc)
                .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &UniSeries) -> UniSeries {
        let trunc = self.trunc().min(rhs.trunc());
        let mut coeffs = vec![BigInt::zero(); trunc + 1];
        for i in 0..=trunc {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=trunc - i {
                coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        UniSeries { coeffs }
    }

    /// self / rhs; rhs must have constant term 1 so the quotient stays
    /// integral.
    pub fn div(&self, rhs: &UniSeries) -> UniSeries {
        assert!(rhs.coeffs[0].is_one(), "division requires constant term 1");
        let trunc = self.trunc().min(rhs.trunc());
        let mut quotient = vec![BigInt::zero(); trunc + 1];
        for n in 0..=trunc {
            let mut value = self.coeffs[n].clone();
            for j in 1..=n {
                value -= &rhs.coeffs[j] * &quotient[n - j];
            }
            quotient[n] = value;
        }
        UniSeries { coeffs: quotient }
    }
}

/// Series in x whose coefficients are integer polynomials in y, truncated
/// after x^N.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiSeries {
    coeffs: Vec<YPoly>,
}

impl BiSeries {
    pub fn zero(trunc: usize) -> BiSeries {
        BiSeries {
            coeffs: vec![YPoly::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> BiSeries {
        let mut s = BiSeries::zero(trunc);
        s.coeffs[0] = YPoly::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<YPoly>) -> BiSeries {
        assert!(!coeffs.is_empty());
        BiSeries { coeffs }
    }

    /// Embed a plain series in x (y-degree 0 coefficients).
    pub fn from_uni(series: &UniSeries) -> BiSeries {
        BiSeries {
            coeffs: series
                .coeffs()
                .iter()
                .map(|c| YPoly::from_coeffs(vec![c.clone()]))
                .collect(),
        }
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^n (a polynomial in y).
    pub fn coeff(&self, n: usize) -> &YPoly {
        &self.coeffs[n]
    }

    pub fn add(&self, rhs: &BiSeries) -> BiSeries {
        let trunc = self.trunc().min(rhs.trunc());
        BiSeries {
            coeffs: (0..=trunc)
                .map(|n| self.coeffs[n].add(&rhs.coeffs[n]))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &BiSeries) -> BiSeries {
        let trunc = self.trunc().min(rhs.trunc());
        BiSeries {
            coeffs: (0..=trunc)
                .map(|n| self.coeffs[n].sub(&rhs.coeffs[n]))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &BiSeries) -> BiSeries {
        let trunc = self.trunc().min(rhs.trunc());
        let mut coeffs = vec![YPoly::zero(); trunc + 1];
        for i in 0..=trunc {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=trunc - i {
                coeffs[i + j] = coeffs[i + j].add(&self.coeffs[i].mul(&rhs.coeffs[j]));
            }
        }
        BiSeries { coeffs }
    }

    /// Multiply every coefficient by a fixed polynomial in y.
    pub fn scale_y(&self, factor: &YPoly) -> BiSeries {
        BiSeries {
            coeffs: self.coeffs.iter().map(|c| c.mul(factor)).collect(),
        }
    }

    /// self / rhs; the x^0 coefficient of rhs must be the constant 1.
    pub fn div(&self, rhs: &BiSeries) -> BiSeries {
        assert_eq!(
            rhs.coeffs[0],
            YPoly::one(),
            "division requires constant term 1"
        );
        let trunc = self.trunc().min(rhs.trunc());
        let mut quotient = vec![YPoly::zero(); trunc + 1];
        for n in 0..=trunc {
            let mut value = self.coeffs[n].clone();
            for j in 1..=n {
                value = value.sub(&rhs.coeffs[j].mul(&quotient[n - j]));
            }
            quotient[n] = value;
        }
        BiSeries { coeffs: quotient }
    }

    /// Substitute an integer for y, collapsing to a plain series in x.
    pub fn eval_y(&self, y: &BigInt) -> UniSeries {
        UniSeries {
            coeffs: self.coeffs.iter().map(|c| c.eval(y)).collect(),
        }
    }
}
