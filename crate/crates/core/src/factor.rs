//! Specialized LU factorization `A = L U` of a nearly pentadiagonal matrix,
//! forward/back substitution and the determinant, all in O(n).
//!
//! `L` is unit lower triangular with subdiagonal `f_2..f_n`, second
//! subdiagonal `r_i = b̃_i / c_{i-2}` (i = 3..n-1), and two fill-ins in the
//! last row: `g = t / c_{n-3}` at column n-3 and `f_1` at column n-2.
//! `U` has diagonal `c`, superdiagonal `e_1..e_{n-1}`, second superdiagonal
//! ã (with ã_2 replaced by `e_n`) and the corner `s` at (1, 4).
//!
//! No rows are ever exchanged. A vanishing pivot is reported as
//! [`Error::ZeroPivot`]; the symbolic solver reruns the same recurrences
//! over rational functions to get past it.

use crate::error::{Error, Result};
use crate::matrix::{Dense, NearlyPentaMatrix};
use crate::scalar::Scalar;
use serde::Serialize;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct Factorization<T> {
    c: Vec<T>,
    /// e_1..e_{n-1}; slot n holds e_n = U[2, 4].
    e: Vec<T>,
    /// slot 1 holds f_1 = L[n, n-2]; slots 2..n hold L[i, i-1].
    f: Vec<T>,
    /// r_3..r_{n-1}.
    r: Vec<T>,
    g: T,
    s: T,
    /// U's second superdiagonal: ã_1..ã_{n-2} with ã_2 = e_n.
    a_tilde: Vec<T>,
}

/// Which arithmetic produced a [`SolveReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Numeric,
    Exact,
    Symbolic,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Numeric => "numeric",
            Mode::Exact => "exact",
            Mode::Symbolic => "symbolic",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveReport<T> {
    pub x: Vec<T>,
    pub det: T,
    pub mode: Mode,
    /// 1-based indices of pivots rescued symbolically.
    pub zero_pivots: Vec<usize>,
    /// `max_i |(A x - y)_i|`, numeric mode only.
    pub residual_norm: Option<f64>,
}

/// Runs the factorization recurrences, passing every pivot `c_i` through
/// `pivot(i, c_i)` before it is used. The hook may reject the pivot or
/// substitute another value.
pub(crate) fn factorize_with<T, F>(
    m: &NearlyPentaMatrix<T>,
    mut pivot: F,
) -> Result<Factorization<T>>
where
    T: Scalar,
    F: FnMut(usize, T) -> Result<T>,
{
    let n = m.n();
    let s = m.s().clone();
    let t = m.t().clone();
    let mut c = vec![T::zero(); n];
    let mut e = vec![T::zero(); n];
    let mut f = vec![T::zero(); n];
    let mut r = Vec::with_capacity(n - 3);
    let mut at = m.a_tilde_vec().to_vec();

    c[0] = pivot(1, m.d(1).clone())?;
    e[0] = m.a(1).clone();
    f[1] = m.b(2).div(&c[0])?;
    c[1] = pivot(2, m.d(2).sub(&f[1].mul(&e[0])))?;
    e[1] = m.a(2).sub(&f[1].mul(&at[0]));
    // U[2, 4] picks up the corner s; it takes ã_2's place from here on.
    e[n - 1] = at[1].sub(&f[1].mul(&s));
    at[1] = e[n - 1].clone();

    // Rows 3..n-1. With 1-based i, c_{i-2} is c[i - 3] and so on.
    for i in 3..n {
        let ri = m.b_tilde(i).div(&c[i - 3])?;
        f[i - 1] = m.b(i).sub(&ri.mul(&e[i - 3])).div(&c[i - 2])?;
        let ci = m
            .d(i)
            .sub(&f[i - 1].mul(&e[i - 2]))
            .sub(&ri.mul(&at[i - 3]));
        c[i - 1] = pivot(i, ci)?;
        let mut ei = m.a(i).sub(&f[i - 1].mul(&at[i - 2]));
        if i == 3 {
            ei = ei.sub(&ri.mul(&s));
        }
        e[i - 1] = ei;
        r.push(ri);
    }

    // Last row: fill-ins from the corner t.
    let g = t.div(&c[n - 4])?;
    f[0] = m.b_tilde(n).sub(&g.mul(&e[n - 4])).div(&c[n - 3])?;
    f[n - 1] = m
        .b(n)
        .sub(&g.mul(&at[n - 4]))
        .sub(&f[0].mul(&e[n - 3]))
        .div(&c[n - 2])?;
    let cn = m
        .d(n)
        .sub(&f[0].mul(&at[n - 3]))
        .sub(&f[n - 1].mul(&e[n - 2]));
    c[n - 1] = pivot(n, cn)?;

    Ok(Factorization {
        c,
        e,
        f,
        r,
        g,
        s,
        a_tilde: at,
    })
}

/// Factorizes with an exact zero-pivot test.
pub fn factorize<T: Scalar>(m: &NearlyPentaMatrix<T>) -> Result<Factorization<T>> {
    factorize_tol(m, 0.0)
}

/// Factorizes, treating pivots with `|c_i| <= tol` as zero (float only;
/// exact fields ignore `tol`).
pub fn factorize_tol<T: Scalar>(m: &NearlyPentaMatrix<T>, tol: f64) -> Result<Factorization<T>> {
    factorize_with(m, |i, c| {
        if c.is_negligible(tol) {
            Err(Error::ZeroPivot(i))
        } else {
            Ok(c)
        }
    })
}

impl<T: Scalar> Factorization<T> {
    pub fn n(&self) -> usize {
        self.c.len()
    }

    /// Pivots c_1..c_n.
    pub fn pivots(&self) -> &[T] {
        &self.c
    }
    pub fn c(&self, i: usize) -> &T {
        &self.c[i - 1]
    }
    /// e_i for i in 1..=n (e_n is U[2, 4]).
    pub fn e(&self, i: usize) -> &T {
        &self.e[i - 1]
    }
    /// f_i for i in 1..=n (f_1 is L[n, n-2]).
    pub fn f(&self, i: usize) -> &T {
        &self.f[i - 1]
    }
    /// r_i = b̃_i / c_{i-2} for i in 3..=n-1.
    pub fn r(&self, i: usize) -> &T {
        &self.r[i - 3]
    }
    /// t / c_{n-3}.
    pub fn g(&self) -> &T {
        &self.g
    }
    pub fn s(&self) -> &T {
        &self.s
    }
    /// U's second superdiagonal, ã_i for i in 1..=n-2 (ã_2 = e_n).
    pub fn a_tilde(&self, i: usize) -> &T {
        &self.a_tilde[i - 1]
    }

    /// Product of the pivots.
    pub fn determinant(&self) -> T {
        self.c.iter().fold(T::one(), |acc, c| acc.mul(c))
    }

    /// Solves `L z = y`.
    pub fn forward_substitute(&self, y: &[T]) -> Result<Vec<T>> {
        let n = self.n();
        if y.len() != n {
            return Err(Error::LengthMismatch {
                what: "y",
                expected: n,
                actual: y.len(),
            });
        }
        let mut z = Vec::with_capacity(n);
        z.push(y[0].clone());
        z.push(y[1].sub(&self.f[1].mul(&z[0])));
        for i in 3..n {
            let zi = y[i - 1]
                .sub(&self.f[i - 1].mul(&z[i - 2]))
                .sub(&self.r[i - 3].mul(&z[i - 3]));
            z.push(zi);
        }
        let zn = y[n - 1]
            .sub(&self.f[n - 1].mul(&z[n - 2]))
            .sub(&self.f[0].mul(&z[n - 3]))
            .sub(&self.g.mul(&z[n - 4]));
        z.push(zn);
        Ok(z)
    }

    /// Solves `U x = z`.
    pub fn back_substitute(&self, z: &[T]) -> Result<Vec<T>> {
        let n = self.n();
        if z.len() != n {
            return Err(Error::LengthMismatch {
                what: "z",
                expected: n,
                actual: z.len(),
            });
        }
        let mut x = vec![T::zero(); n];
        x[n - 1] = z[n - 1].div(&self.c[n - 1])?;
        x[n - 2] = z[n - 2]
            .sub(&self.e[n - 2].mul(&x[n - 1]))
            .div(&self.c[n - 2])?;
        for i in (2..=n - 2).rev() {
            x[i - 1] = z[i - 1]
                .sub(&self.e[i - 1].mul(&x[i]))
                .sub(&self.a_tilde[i - 1].mul(&x[i + 1]))
                .div(&self.c[i - 1])?;
        }
        x[0] = z[0]
            .sub(&self.e[0].mul(&x[1]))
            .sub(&self.a_tilde[0].mul(&x[2]))
            .sub(&self.s.mul(&x[3]))
            .div(&self.c[0])?;
        Ok(x)
    }

    /// Forward then back substitution.
    pub fn solve(&self, y: &[T]) -> Result<Vec<T>> {
        self.back_substitute(&self.forward_substitute(y)?)
    }

    /// The unit lower triangular factor as a dense matrix.
    pub fn lower_dense(&self) -> Dense<T> {
        let n = self.n();
        let mut l = vec![vec![T::zero(); n]; n];
        for (i, row) in l.iter_mut().enumerate() {
            row[i] = T::one();
        }
        for i in 2..=n {
            l[i - 1][i - 2] = self.f[i - 1].clone();
        }
        for i in 3..n {
            l[i - 1][i - 3] = self.r[i - 3].clone();
        }
        l[n - 1][n - 3] = self.f[0].clone();
        l[n - 1][n - 4] = self.g.clone();
        l
    }

    /// The upper triangular factor as a dense matrix.
    pub fn upper_dense(&self) -> Dense<T> {
        let n = self.n();
        let mut u = vec![vec![T::zero(); n]; n];
        for i in 1..=n {
            u[i - 1][i - 1] = self.c[i - 1].clone();
        }
        for i in 1..n {
            u[i - 1][i] = self.e[i - 1].clone();
        }
        for i in 1..=n - 2 {
            u[i - 1][i + 1] = self.a_tilde[i - 1].clone();
        }
        u[0][3] = self.s.clone();
        u
    }
}

/// `A x` from the stored bands only.
pub fn band_matvec<T: Scalar>(m: &NearlyPentaMatrix<T>, x: &[T]) -> Result<Vec<T>> {
    let n = m.n();
    if x.len() != n {
        return Err(Error::LengthMismatch {
            what: "x",
            expected: n,
            actual: x.len(),
        });
    }
    let out = (1..=n)
        .map(|i| {
            let mut acc = m.d(i).mul(&x[i - 1]);
            if i >= 2 {
                acc = acc.add(&m.b(i).mul(&x[i - 2]));
            }
            if i >= 3 {
                acc = acc.add(&m.b_tilde(i).mul(&x[i - 3]));
            }
            if i < n {
                acc = acc.add(&m.a(i).mul(&x[i]));
            }
            if i + 2 <= n {
                acc = acc.add(&m.a_tilde(i).mul(&x[i + 1]));
            }
            if i == 1 {
                acc = acc.add(&m.s().mul(&x[3]));
            }
            if i == n {
                acc = acc.add(&m.t().mul(&x[n - 4]));
            }
            acc
        })
        .collect();
    Ok(out)
}

/// `max_i |(A x - y)_i|`, or `None` for fields without a magnitude.
pub fn residual_norm<T: Scalar>(m: &NearlyPentaMatrix<T>, x: &[T], y: &[T]) -> Result<Option<f64>> {
    let ax = band_matvec(m, x)?;
    let mut worst: f64 = 0.0;
    for (lhs, rhs) in ax.iter().zip(y) {
        match lhs.sub(rhs).magnitude() {
            Some(v) => worst = worst.max(v),
            None => return Ok(None),
        }
    }
    Ok(Some(worst))
}

/// Factorize, substitute and take the pivot product. Fails with
/// `ZeroPivot(i)` on the first vanishing pivot.
pub fn solve_knpenta<T: Scalar>(m: &NearlyPentaMatrix<T>, y: &[T]) -> Result<SolveReport<T>> {
    solve_knpenta_tol(m, y, 0.0)
}

pub fn solve_knpenta_tol<T: Scalar>(
    m: &NearlyPentaMatrix<T>,
    y: &[T],
    tol: f64,
) -> Result<SolveReport<T>> {
    if y.len() != m.n() {
        return Err(Error::LengthMismatch {
            what: "y",
            expected: m.n(),
            actual: y.len(),
        });
    }
    let lu = factorize_tol(m, tol)?;
    let x = lu.solve(y)?;
    let (mode, residual_norm) = if T::is_exact() {
        (Mode::Exact, None)
    } else {
        (Mode::Numeric, residual_norm(m, &x, y)?)
    };
    Ok(SolveReport {
        det: lu.determinant(),
        x,
        mode,
        zero_pivots: Vec::new(),
        residual_norm,
    })
}
