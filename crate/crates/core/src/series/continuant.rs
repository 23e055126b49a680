//! k-continuants: the recurrence K_{k,n} = K_{k,n-k} + K_{k,n-1} x_n (with
//! K_{k,n} = x_1...x_n for n < k), the k x k transfer-matrix form, the
//! block-deletion expansion, and the numeric root-of-unity identity linking
//! continuants to the Q_k denominator polynomials.

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::multipoly::MultiPoly;
use super::types::q_poly;

/// K_{k,n}(x_1, ..., x_n) as a polynomial in n variables.
pub fn continuant_poly(k: u32, n: usize) -> MultiPoly {
    assert!(k >= 2, "k must be at least 2");
    let k = k as usize;
    // table[m] = K_{k,m}(x_1..x_m) embedded in n variables.
    let mut table: Vec<MultiPoly> = Vec::with_capacity(n + 1);
    table.push(MultiPoly::one(n));
    for m in 1..=n {
        let mut poly = &table[m - 1] * &MultiPoly::var(n, m);
        if m >= k {
            poly = &poly + &table[m - k];
        }
        table.push(poly);
    }
    table.pop().expect("table has n+1 entries")
}

/// The stacked vector (K_{k,n}, K_{k,n-1}, ..., K_{k,n-k+1}) computed as
/// M_k(x_n) ... M_k(x_1) e_1, where M_k(x) has first row (x, 0, ..., 0, 1)
/// and ones on the subdiagonal. Entries with negative index are zero.
pub fn continuant_matrix(k: u32, n: usize) -> Vec<MultiPoly> {
    assert!(k >= 2, "k must be at least 2");
    let k = k as usize;
    let mut vector: Vec<MultiPoly> = (0..k)
        .map(|i| {
            if i == 0 {
                MultiPoly::one(n)
            } else {
                MultiPoly::zero(n)
            }
        })
        .collect();
    for m in 1..=n {
        let top = &(&vector[0] * &MultiPoly::var(n, m)) + &vector[k - 1];
        vector.rotate_right(1);
        vector[0] = top;
    }
    vector
}

/// Sum of all products of x_1 ... x_n with any number of disjoint blocks of
/// k consecutive variables deleted. Equal to [`continuant_poly`].
pub fn block_deletion_expansion(k: u32, n: usize) -> MultiPoly {
    assert!(k >= 2, "k must be at least 2");
    let mut out = MultiPoly::zero(n);
    let mut exps = vec![1u32; n];
    delete_blocks(k as usize, 1, n, &mut exps, &mut out);
    out
}

fn delete_blocks(k: usize, pos: usize, n: usize, exps: &mut Vec<u32>, out: &mut MultiPoly) {
    if pos + k - 1 > n {
        *out = &*out + &MultiPoly::monomial(n, exps.clone(), BigInt::one());
        return;
    }
    delete_blocks(k, pos + 1, n, exps, out);
    for i in pos..pos + k {
        exps[i - 1] = 0;
    }
    delete_blocks(k, pos + k, n, exps, out);
    for i in pos..pos + k {
        exps[i - 1] = 1;
    }
}

/// K_{k,n}(1, ..., 1): the term count, satisfying a_n = a_{n-1} + a_{n-k}
/// with a_0 = ... = a_{k-1} = 1.
pub fn continuant_ones(k: u32, n: usize) -> BigUint {
    assert!(k >= 2, "k must be at least 2");
    let k = k as usize;
    let mut table: Vec<BigUint> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let value = if m < k {
            BigUint::one()
        } else {
            &table[m - 1] + &table[m - k]
        };
        table.push(value);
    }
    table.pop().expect("table has n+1 entries")
}

/// Evaluate K_{k,n} at complex arguments via the defining recurrence.
pub fn continuant_eval_complex(k: u32, args: &[Complex64]) -> Complex64 {
    assert!(k >= 2, "k must be at least 2");
    let k = k as usize;
    let mut table: Vec<Complex64> = Vec::with_capacity(args.len() + 1);
    table.push(Complex64::new(1.0, 0.0));
    for m in 1..=args.len() {
        let mut value = table[m - 1] * args[m - 1];
        if m >= k {
            value += table[m - k];
        }
        table.push(value);
    }
    table.pop().expect("table nonempty")
}

/// Evaluate K_{k,n} at exact rational arguments.
pub fn continuant_eval_rational(k: u32, args: &[BigRational]) -> BigRational {
    assert!(k >= 2, "k must be at least 2");
    let k = k as usize;
    let mut table: Vec<BigRational> = Vec::with_capacity(args.len() + 1);
    table.push(BigRational::one());
    for m in 1..=args.len() {
        let mut value = &table[m - 1] * &args[m - 1];
        if m >= k {
            value += &table[m - k];
        }
        table.push(value);
    }
    table.pop().expect("table nonempty")
}

/// Numeric check of the identity
/// Q_k(x_1..x_r) = zeta^r x_1...x_r K_{k,r}(1/(zeta x_1), ..., 1/(zeta x_r))
/// with zeta = exp(i pi / k), at the given positive rational sample points.
/// Passes when |lhs - rhs| <= 1e-9 in complex double precision everywhere.
pub fn q_vs_continuant_check(k: u32, r: usize, samples: &[Vec<BigRational>]) -> bool {
    assert!(k >= 2, "k must be at least 2");
    let q = q_poly(k, r);
    let zeta = Complex64::from_polar(1.0, std::f64::consts::PI / f64::from(k));
    samples.iter().all(|sample| {
        assert_eq!(sample.len(), r, "each sample needs r coordinates");
        let xs: Vec<f64> = sample
            .iter()
            .map(|x| x.to_f64().expect("rational fits in f64"))
            .collect();
        let lhs = Complex64::new(q.eval_f64(&xs), 0.0);
        let args: Vec<Complex64> = xs.iter().map(|&x| 1.0 / (zeta * x)).collect();
        let mut rhs = zeta.powu(r as u32) * continuant_eval_complex(k, &args);
        for &x in &xs {
            rhs *= x;
        }
        (lhs - rhs).norm() <= 1e-9
    })
}

/// Deterministic pseudo-random positive rationals (numerators and
/// denominators in 3..=8, so every value lies in [3/8, 8/3]), for the
/// numeric continuant checks.
pub fn random_positive_rationals(seed: u64, points: usize, r: usize) -> Vec<Vec<BigRational>> {
    let mut state = seed;
    let mut next = move || {
        // splitmix64
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    (0..points)
        .map(|_| {
            (0..r)
                .map(|_| {
                    let num = 3 + (next() % 6) as i64;
                    let den = 3 + (next() % 6) as i64;
                    BigRational::new(num.into(), den.into())
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn ones_sequences() {
        let fib: Vec<u32> = (0..=5)
            .map(|n| continuant_ones(2, n).to_u32().unwrap())
            .collect();
        assert_eq!(fib, [1, 1, 2, 3, 5, 8]);
        let narayana: Vec<u32> = (0..=8)
            .map(|n| continuant_ones(3, n).to_u32().unwrap())
            .collect();
        assert_eq!(narayana, [1, 1, 1, 2, 3, 4, 6, 9, 13]);
    }

    #[test]
    fn small_symbolic_continuants() {
        // K_{2,2} = x1 x2 + 1.
        let k22 = continuant_poly(2, 2);
        assert_eq!(k22.coeff(&[1, 1]), 1.into());
        assert_eq!(k22.coeff(&[0, 0]), 1.into());
        assert_eq!(k22.num_terms(), 2);
        // n < k: plain product.
        let k42 = continuant_poly(4, 2);
        assert_eq!(k42.coeff(&[1, 1]), 1.into());
        assert_eq!(k42.num_terms(), 1);
    }

    #[test]
    fn block_deletion_examples() {
        let b = block_deletion_expansion(2, 3);
        assert_eq!(b.coeff(&[1, 1, 1]), 1.into());
        assert_eq!(b.coeff(&[0, 0, 1]), 1.into());
        assert_eq!(b.coeff(&[1, 0, 0]), 1.into());
        assert_eq!(b.num_terms(), 3);
        assert_eq!(block_deletion_expansion(4, 3), continuant_poly(4, 3));
    }

    #[test]
    fn matrix_form_matches_recurrence() {
        let vec = continuant_matrix(2, 0);
        assert!(vec[0] == MultiPoly::one(0) && vec[1].is_zero());
        let vec = continuant_matrix(2, 5);
        let point = vec![Complex64::new(1.0, 0.0); 5];
        assert_eq!(vec[0].eval_complex(&point).re.round() as i64, 8);
        let vec = continuant_matrix(3, 4);
        assert_eq!(vec[0], continuant_poly(3, 4));
        assert_eq!(vec[1], continuant_poly(3, 3).pad_to(4));
        assert_eq!(vec[2], continuant_poly(3, 2).pad_to(4));
    }

    #[test]
    fn q_vs_continuant_examples() {
        let ones = vec![vec![BigRational::one(); 3]];
        assert!(q_vs_continuant_check(2, 3, &ones));
        let halves = vec![vec![BigRational::new(1.into(), 2.into()); 6]];
        assert!(q_vs_continuant_check(3, 6, &halves));
        let single = vec![vec![BigRational::one()]];
        assert!(q_vs_continuant_check(2, 1, &single));
        let samples = random_positive_rationals(42, 5, 4);
        assert!(q_vs_continuant_check(2, 4, &samples));
        assert!(!samples.iter().flatten().any(|x| x.is_zero()));
    }
}
