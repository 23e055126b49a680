//! Sparse multivariate polynomials with exact big-integer coefficients.
//!
//! A `MultiPoly` lives in a fixed variable list x_1, ..., x_r; terms map
//! exponent vectors (length r) to nonzero coefficients. Canonical output
//! order is graded lexicographic with x_1 < ... < x_r.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> MultiPoly {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> MultiPoly {
        MultiPoly::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, value: BigInt) -> MultiPoly {
        let mut poly = MultiPoly::zero(nvars);
        if !value.is_zero() {
            poly.terms.insert(vec![0; nvars], value);
        }
        poly
    }

    /// The variable x_index (1-based).
    pub fn var(nvars: usize, index: usize) -> MultiPoly {
        assert!(index >= 1 && index <= nvars, "variable index out of range");
        let mut exps = vec![0u32; nvars];
        exps[index - 1] = 1;
        MultiPoly::monomial(nvars, exps, BigInt::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, coef: BigInt) -> MultiPoly {
        assert_eq!(exps.len(), nvars);
        let mut poly = MultiPoly::zero(nvars);
        if !coef.is_zero() {
            poly.terms.insert(exps, coef);
        }
        poly
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        assert_eq!(exps.len(), self.nvars);
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn max_total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn add_term(&mut self, exps: Vec<u32>, coef: &BigInt) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coef;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coef.clone());
            }
        }
    }

    /// Product keeping only terms of total degree <= `max_deg`.
    pub fn mul_truncated(&self, rhs: &MultiPoly, max_deg: u32) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            if da > max_deg {
                continue;
            }
            for (eb, cb) in &rhs.terms {
                let db: u32 = eb.iter().sum();
                if da + db > max_deg {
                    continue;
                }
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, &(ca * cb));
            }
        }
        out
    }

    /// Drop all terms of total degree > `max_deg`.
    pub fn truncated(&self, max_deg: u32) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() <= max_deg {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Reinterpret in a larger variable list (new variables get exponent 0).
    pub fn pad_to(&self, nvars: usize) -> MultiPoly {
        assert!(nvars >= self.nvars);
        let mut out = MultiPoly::zero(nvars);
        for (e, c) in &self.terms {
            let mut exps = e.clone();
            exps.resize(nvars, 0);
            out.terms.insert(exps, c.clone());
        }
        out
    }

    /// Terms in graded lexicographic order (total degree, then exponents).
    pub fn terms_graded_lex(&self) -> Vec<(&Vec<u32>, &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(e, _)| (e.iter().sum::<u32>(), (*e).clone()));
        terms
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.nvars);
        let mut total = 0.0;
        for (e, c) in &self.terms {
            let mut term = c.to_f64().expect("coefficient fits in f64");
            for (x, &exp) in point.iter().zip(e) {
                term *= x.powi(exp as i32);
            }
            total += term;
        }
        total
    }

    pub fn eval_complex(&self, point: &[Complex64]) -> Complex64 {
        assert_eq!(point.len(), self.nvars);
        let mut total = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut term = Complex64::new(c.to_f64().expect("coefficient fits in f64"), 0.0);
            for (x, &exp) in point.iter().zip(e) {
                term *= x.powu(exp);
            }
            total += term;
        }
        total
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &(-c));
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_truncated(rhs, u32::MAX)
    }
}

impl std::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (exps, coef)) in self.terms_graded_lex().into_iter().enumerate() {
            let mag = coef.abs();
            if i == 0 {
                if coef.is_negative() {
                    f.write_str("-")?;
                }
            } else if coef.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let monomial: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        format!("x{}", v + 1)
                    } else {
                        format!("x{}^{}", v + 1, e)
                    }
                })
                .collect();
            if monomial.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&monomial.join("*"))?;
            } else {
                write!(f, "{mag}*{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exps: Vec<u32>,
    coef: String,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm> = self
            .terms_graded_lex()
            .into_iter()
            .map(|(e, c)| JsonTerm {
                exps: e.clone(),
                coef: c.to_string(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let terms = Vec::<JsonTerm>::deserialize(deserializer)?;
        let nvars = terms.first().map_or(0, |t| t.exps.len());
        let mut poly = MultiPoly::zero(nvars);
        for term in terms {
            if term.exps.len() != nvars {
                return Err(D::Error::custom("inconsistent exponent vector lengths"));
            }
            let coef: BigInt = term
                .coef
                .parse()
                .map_err(|_| D::Error::custom("invalid big integer coefficient"))?;
            poly.add_term(term.exps, &coef);
        }
        Ok(poly)
    }
}
