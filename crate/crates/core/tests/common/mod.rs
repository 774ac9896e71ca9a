#![allow(dead_code)]

use nearpenta::matrix::{gen_random, Dense, NearlyPentaMatrix};
use nearpenta::oracle::dense_det;
use nearpenta::scalar::{Rational, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn qs(v: &[&str]) -> Vec<Rational> {
    v.iter().map(|s| q(s)).collect()
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from(x)).collect()
}

/// Coefficient matrix of the first worked example (n = 10).
pub fn example_matrix(d1: i64) -> NearlyPentaMatrix<Rational> {
    let mut d = ints(&[3, 2, 5, 1, 2, 2, 12, 3, 21, 31]);
    d[0] = Rational::from(d1);
    NearlyPentaMatrix::new(
        d,
        ints(&[-1, 1, 5, 1, 5, 7, 3, 1, 3]),
        ints(&[3, 2, 1, 3, 1, -5, -4, 20]),
        ints(&[-2, -4, -2, 1, -3, 1, 5, 11, -9]),
        ints(&[3, 3, 6, 3, -8, 2, 3, 4]),
        Rational::from(5),
        Rational::from(-2),
    )
    .unwrap()
}

pub fn worked() -> (NearlyPentaMatrix<Rational>, Vec<Rational>) {
    (
        example_matrix(3),
        ints(&[30, 13, 35, 27, 69, 18, 38, 280, 328, 247]),
    )
}

/// Same matrix with d_1 = 0 and y_1 = 27; solution is still 1..10.
pub fn rescue() -> (NearlyPentaMatrix<Rational>, Vec<Rational>) {
    (
        example_matrix(0),
        ints(&[27, 13, 35, 27, 69, 18, 38, 280, 328, 247]),
    )
}

pub fn worked_dense() -> Dense<Rational> {
    [
        [3, -1, 3, 5, 0, 0, 0, 0, 0, 0],
        [-2, 2, 1, 2, 0, 0, 0, 0, 0, 0],
        [3, -4, 5, 5, 1, 0, 0, 0, 0, 0],
        [0, 3, -2, 1, 1, 3, 0, 0, 0, 0],
        [0, 0, 6, 1, 2, 5, 1, 0, 0, 0],
        [0, 0, 0, 3, -3, 2, 7, -5, 0, 0],
        [0, 0, 0, 0, -8, 1, 12, 3, -4, 0],
        [0, 0, 0, 0, 0, 2, 5, 3, 1, 20],
        [0, 0, 0, 0, 0, 0, 3, 11, 21, 3],
        [0, 0, 0, 0, 0, 0, -2, 4, -9, 31],
    ]
    .iter()
    .map(|r| ints(r))
    .collect()
}

pub fn one_to_n(n: usize) -> Vec<Rational> {
    (1..=n as i64).map(Rational::from).collect()
}

fn leading_minor(dense: &Dense<Rational>, k: usize) -> Rational {
    if k == 0 {
        return Rational::one();
    }
    let sub: Dense<Rational> = dense[..k].iter().map(|row| row[..k].to_vec()).collect();
    dense_det(&sub)
}

/// Adjusts d_k so that the k-th leading principal minor vanishes (which
/// makes pivot c_k zero). Uses only dense determinants: the k-th minor is
/// affine in d_k with slope equal to the (k-1)-th minor. Returns `None` if
/// the (k-1)-th minor is already zero.
pub fn zero_leading_minor(
    m: &NearlyPentaMatrix<Rational>,
    k: usize,
) -> Option<NearlyPentaMatrix<Rational>> {
    let mut dense = m.to_dense();
    let prev = leading_minor(&dense, k - 1);
    if prev.is_zero() {
        return None;
    }
    let cur = leading_minor(&dense, k);
    let shift = cur.div(&prev).unwrap();
    dense[k - 1][k - 1] = dense[k - 1][k - 1].sub(&shift);
    debug_assert!(leading_minor(&dense, k).is_zero());
    Some(NearlyPentaMatrix::from_dense(&dense).unwrap())
}

#[derive(Clone, Debug)]
pub struct Case {
    pub seed: u64,
    pub matrix: NearlyPentaMatrix<Rational>,
    pub y: Vec<Rational>,
    /// Leading minors forced to zero when building the case.
    pub forced: Vec<usize>,
}

/// Seeded nonsingular exact system. Every third seed gets one or two
/// vanishing leading minors (always including k = 1 on seeds divisible by 9).
pub fn random_case(seed: u64, n_min: usize, n_max: usize) -> Case {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0000);
    let n = rng.gen_range(n_min..=n_max);
    let mut attempt = 0u64;
    loop {
        let base = gen_random(n, seed * 1000 + attempt, false).unwrap();
        attempt += 1;
        let mut forced = Vec::new();
        let mut m = base;
        if seed.is_multiple_of(3) {
            let k1 = if seed.is_multiple_of(9) {
                1
            } else {
                rng.gen_range(1..n)
            };
            match zero_leading_minor(&m, k1) {
                Some(next) => {
                    m = next;
                    forced.push(k1);
                }
                None => continue,
            }
            if rng.gen_bool(0.5) && k1 + 2 < n {
                let k2 = rng.gen_range(k1 + 2..n);
                if let Some(next) = zero_leading_minor(&m, k2) {
                    m = next;
                    forced.push(k2);
                }
            }
        }
        if dense_det(&m.to_dense()).is_zero() {
            continue;
        }
        let y = (0..n)
            .map(|_| Rational::from(rng.gen_range(-20i64..=20)))
            .collect();
        return Case {
            seed,
            matrix: m,
            y,
            forced,
        };
    }
}

/// The 200-system corpus shared by the oracle-equivalence and reassembly checks.
pub fn corpus() -> Vec<Case> {
    (0..200).map(|seed| random_case(seed, 5, 30)).collect()
}
