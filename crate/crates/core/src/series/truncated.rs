//! Multivariate power series truncated at a total degree bound.
//!
//! Division only ever happens by series with constant term 1 (the k-Catalan
//! denominator polynomials guarantee this), so inversion is a finite
//! geometric sum: 1/(1-C) = sum C^j with C constant-free.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::multipoly::MultiPoly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedMultiSeries {
    poly: MultiPoly,
    trunc: u32,
}

impl TruncatedMultiSeries {
    /// Wrap a polynomial, dropping terms of total degree > `trunc`.
    pub fn new(poly: MultiPoly, trunc: u32) -> TruncatedMultiSeries {
        TruncatedMultiSeries {
            poly: poly.truncated(trunc),
            trunc,
        }
    }

    pub fn zero(nvars: usize, trunc: u32) -> TruncatedMultiSeries {
        TruncatedMultiSeries {
            poly: MultiPoly::zero(nvars),
            trunc,
        }
    }

    pub fn one(nvars: usize, trunc: u32) -> TruncatedMultiSeries {
        TruncatedMultiSeries::new(MultiPoly::one(nvars), trunc)
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.poly.coeff(exps)
    }

    pub fn add(&self, rhs: &TruncatedMultiSeries) -> TruncatedMultiSeries {
        let trunc = self.trunc.min(rhs.trunc);
        TruncatedMultiSeries::new(&self.poly + &rhs.poly, trunc)
    }

    pub fn sub(&self, rhs: &TruncatedMultiSeries) -> TruncatedMultiSeries {
        let trunc = self.trunc.min(rhs.trunc);
        TruncatedMultiSeries::new(&self.poly - &rhs.poly, trunc)
    }

    pub fn mul(&self, rhs: &TruncatedMultiSeries) -> TruncatedMultiSeries {
        let trunc = self.trunc.min(rhs.trunc);
        TruncatedMultiSeries {
            poly: self.poly.mul_truncated(&rhs.poly, trunc),
            trunc,
        }
    }

    /// Multiplicative inverse; the constant term must be 1.
    pub fn inverse(&self) -> TruncatedMultiSeries {
        let nvars = self.nvars();
        let const_term = self.poly.coeff(&vec![0; nvars]);
        assert!(const_term.is_one(), "inverse requires constant term 1");
        // C = 1 - self has minimum total degree >= 1, so C^j vanishes past
        // degree trunc for j > trunc.
        let c = &MultiPoly::one(nvars) - &self.poly;
        let mut sum = MultiPoly::one(nvars);
        let mut power = MultiPoly::one(nvars);
        for _ in 0..self.trunc {
            power = power.mul_truncated(&c, self.trunc);
            if power.is_zero() {
                break;
            }
            sum = &sum + &power;
        }
        TruncatedMultiSeries {
            poly: sum,
            trunc: self.trunc,
        }
    }

    /// self / rhs, requiring rhs to have constant term 1.
    pub fn div(&self, rhs: &TruncatedMultiSeries) -> TruncatedMultiSeries {
        self.mul(&rhs.inverse())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonSeries {
    trunc: u32,
    terms: MultiPoly,
}

impl Serialize for TruncatedMultiSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        JsonSeries {
            trunc: self.trunc,
            terms: self.poly.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedMultiSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = JsonSeries::deserialize(deserializer)?;
        Ok(TruncatedMultiSeries::new(repr.terms, repr.trunc))
    }
}

impl std::fmt::Display for TruncatedMultiSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} + O(deg {})", self.poly, self.trunc + 1)
    }
}
