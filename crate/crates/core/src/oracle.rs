//! Dense reference arithmetic used to check the banded solvers.
//!
//! Gaussian elimination with row pivoting on the first nonzero entry in
//! the column (smallest row index wins). Meant for exact scalars; it makes
//! no attempt at numerical stability or speed beyond skipping zeros.

use crate::error::{Error, Result};
use crate::matrix::Dense;
use crate::scalar::Scalar;

/// Reduces `m` (and optionally a right-hand side) to upper triangular form
/// in place. Returns the number of row swaps, or `None` if a column has no
/// nonzero pivot.
fn eliminate<T: Scalar>(m: &mut Dense<T>, mut rhs: Option<&mut Vec<T>>) -> Option<usize> {
    let n = m.len();
    let mut swaps = 0;
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !m[r][col].is_zero())?;
        if pivot_row != col {
            m.swap(pivot_row, col);
            if let Some(y) = rhs.as_deref_mut() {
                y.swap(pivot_row, col);
            }
            swaps += 1;
        }
        let pivot = m[col][col].clone();
        let nonzero_cols: Vec<usize> = (col + 1..n).filter(|&j| !m[col][j].is_zero()).collect();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].div(&pivot).expect("pivot is nonzero");
            m[r][col] = T::zero();
            for &j in &nonzero_cols {
                let delta = factor.mul(&m[col][j]);
                m[r][j] = m[r][j].sub(&delta);
            }
            if let Some(y) = rhs.as_deref_mut() {
                let delta = factor.mul(&y[col]);
                y[r] = y[r].sub(&delta);
            }
        }
    }
    Some(swaps)
}

/// Exact determinant; singular matrices give zero.
pub fn dense_det<T: Scalar>(m: &[Vec<T>]) -> T {
    let mut work = m.to_vec();
    match eliminate(&mut work, None) {
        None => T::zero(),
        Some(swaps) => {
            let prod = (0..work.len()).fold(T::one(), |acc, i| acc.mul(&work[i][i]));
            if swaps % 2 == 1 {
                prod.neg()
            } else {
                prod
            }
        }
    }
}

/// Solves `m x = y`; fails with `SingularMatrix` when `m` has rank < n.
pub fn dense_solve<T: Scalar>(m: &[Vec<T>], y: &[T]) -> Result<Vec<T>> {
    let n = m.len();
    if y.len() != n {
        return Err(Error::LengthMismatch {
            what: "y",
            expected: n,
            actual: y.len(),
        });
    }
    let mut work = m.to_vec();
    let mut rhs = y.to_vec();
    eliminate(&mut work, Some(&mut rhs)).ok_or(Error::SingularMatrix)?;
    let mut x = vec![T::zero(); n];
    for i in (0..n).rev() {
        let mut acc = rhs[i].clone();
        for j in i + 1..n {
            if !work[i][j].is_zero() {
                acc = acc.sub(&work[i][j].mul(&x[j]));
            }
        }
        x[i] = acc.div(&work[i][i])?;
    }
    Ok(x)
}

pub fn dense_matvec<T: Scalar>(m: &[Vec<T>], x: &[T]) -> Vec<T> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .filter(|(a, _)| !a.is_zero())
                .fold(T::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
        })
        .collect()
}

pub fn dense_matmul<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Dense<T> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner)
                        .filter(|&k| !row[k].is_zero() && !b[k][j].is_zero())
                        .fold(T::zero(), |acc, k| acc.add(&row[k].mul(&b[k][j])))
                })
                .collect()
        })
        .collect()
}
