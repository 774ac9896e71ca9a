//! Compact storage for nearly pentadiagonal matrices.
//!
//! ```text
//! | d1  a1  ã1  s                         |
//! | b2  d2  a2  ã2                        |
//! | b̃3  b3  d3  a3  ã3                    |
//! |     b̃4  b4  d4  a4  ã4                |
//! |          ...  ...  ...  ...  ...      |
//! |              b̃n-1 bn-1 dn-1 an-1      |
//! |               t   b̃n   bn   dn        |
//! ```
//!
//! The five bands and the two corners `s` (row 1, column 4) and `t`
//! (row n, column n-3) take `5n - 4` scalars. All accessors on
//! [`NearlyPentaMatrix`] use 1-based indices; the translation to vector
//! offsets happens only in those accessors.

use crate::error::{Error, Result};
use crate::oracle;
use crate::scalar::{Rational, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Smallest supported system size.
pub const MIN_SIZE: usize = 5;

/// Row-major dense matrix.
pub type Dense<T> = Vec<Vec<T>>;

#[derive(Clone, Debug, PartialEq)]
pub struct NearlyPentaMatrix<T> {
    d: Vec<T>,
    a: Vec<T>,
    a_tilde: Vec<T>,
    b: Vec<T>,
    b_tilde: Vec<T>,
    s: T,
    t: T,
}

fn check_len<T>(what: &'static str, v: &[T], expected: usize) -> Result<()> {
    if v.len() != expected {
        return Err(Error::LengthMismatch {
            what,
            expected,
            actual: v.len(),
        });
    }
    Ok(())
}

/// True when 1-based `(row, col)` belongs to the nearly pentadiagonal pattern.
pub fn in_pattern(n: usize, row: usize, col: usize) -> bool {
    row.abs_diff(col) <= 2 || (row == 1 && col == 4) || (row == n && col + 3 == n)
}

impl<T: Scalar> NearlyPentaMatrix<T> {
    /// Builds a matrix from its bands.
    ///
    /// `d` holds d_1..d_n, `a` holds a_1..a_{n-1}, `a_tilde` holds
    /// ã_1..ã_{n-2}, `b` holds b_2..b_n and `b_tilde` holds b̃_3..b̃_n.
    pub fn new(
        d: Vec<T>,
        a: Vec<T>,
        a_tilde: Vec<T>,
        b: Vec<T>,
        b_tilde: Vec<T>,
        s: T,
        t: T,
    ) -> Result<Self> {
        let n = d.len();
        if n < MIN_SIZE {
            return Err(Error::TooSmall { n });
        }
        check_len("a", &a, n - 1)?;
        check_len("a_tilde", &a_tilde, n - 2)?;
        check_len("b", &b, n - 1)?;
        check_len("b_tilde", &b_tilde, n - 2)?;
        Ok(NearlyPentaMatrix {
            d,
            a,
            a_tilde,
            b,
            b_tilde,
            s,
            t,
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::diagonal(vec![T::one(); n])
    }

    fn diagonal(d: Vec<T>) -> Result<Self> {
        let n = d.len();
        if n < MIN_SIZE {
            return Err(Error::TooSmall { n });
        }
        Self::new(
            d,
            vec![T::zero(); n - 1],
            vec![T::zero(); n - 2],
            vec![T::zero(); n - 1],
            vec![T::zero(); n - 2],
            T::zero(),
            T::zero(),
        )
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    /// Number of stored scalars, `5n - 4`.
    pub fn stored_len(&self) -> usize {
        self.d.len() + self.a.len() + self.a_tilde.len() + self.b.len() + self.b_tilde.len() + 2
    }

    /// d_i, i in 1..=n.
    pub fn d(&self, i: usize) -> &T {
        &self.d[i - 1]
    }
    /// a_i, i in 1..=n-1.
    pub fn a(&self, i: usize) -> &T {
        &self.a[i - 1]
    }
    /// ã_i, i in 1..=n-2.
    pub fn a_tilde(&self, i: usize) -> &T {
        &self.a_tilde[i - 1]
    }
    /// b_i, i in 2..=n.
    pub fn b(&self, i: usize) -> &T {
        &self.b[i - 2]
    }
    /// b̃_i, i in 3..=n.
    pub fn b_tilde(&self, i: usize) -> &T {
        &self.b_tilde[i - 3]
    }
    pub fn s(&self) -> &T {
        &self.s
    }
    pub fn t(&self) -> &T {
        &self.t
    }

    pub fn d_vec(&self) -> &[T] {
        &self.d
    }
    pub fn a_vec(&self) -> &[T] {
        &self.a
    }
    pub fn a_tilde_vec(&self) -> &[T] {
        &self.a_tilde
    }
    pub fn b_vec(&self) -> &[T] {
        &self.b
    }
    pub fn b_tilde_vec(&self) -> &[T] {
        &self.b_tilde
    }

    #[cfg(test)]
    pub(crate) fn d_mut(&mut self, i: usize) -> &mut T {
        &mut self.d[i - 1]
    }

    /// Every stored entry as `(row, col, value)` with 1-based coordinates,
    /// in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        let n = self.n();
        (1..=n).flat_map(move |i| {
            let mut row: Vec<(usize, usize, &T)> = Vec::with_capacity(6);
            if i == n {
                row.push((i, n - 3, &self.t));
            }
            if i >= 3 {
                row.push((i, i - 2, self.b_tilde(i)));
            }
            if i >= 2 {
                row.push((i, i - 1, self.b(i)));
            }
            row.push((i, i, self.d(i)));
            if i < n {
                row.push((i, i + 1, self.a(i)));
            }
            if i + 2 <= n {
                row.push((i, i + 2, self.a_tilde(i)));
            }
            if i == 1 {
                row.push((1, 4, &self.s));
            }
            row.into_iter()
        })
    }

    pub fn to_dense(&self) -> Dense<T> {
        let n = self.n();
        let mut m = vec![vec![T::zero(); n]; n];
        for (i, j, v) in self.entries() {
            m[i - 1][j - 1] = v.clone();
        }
        m
    }

    /// Packs a dense matrix, rejecting nonzeros outside the pattern.
    pub fn from_dense(m: &[Vec<T>]) -> Result<Self> {
        let n = m.len();
        for (r, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    row: r + 1,
                    cols: row.len(),
                });
            }
        }
        if n < MIN_SIZE {
            return Err(Error::TooSmall { n });
        }
        for (r, row) in m.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() && !in_pattern(n, r + 1, c + 1) {
                    return Err(Error::NotNearlyPentadiagonal {
                        row: r + 1,
                        col: c + 1,
                    });
                }
            }
        }
        let at = |i: usize, j: usize| m[i - 1][j - 1].clone();
        Self::new(
            (1..=n).map(|i| at(i, i)).collect(),
            (1..n).map(|i| at(i, i + 1)).collect(),
            (1..n - 1).map(|i| at(i, i + 2)).collect(),
            (2..=n).map(|i| at(i, i - 1)).collect(),
            (3..=n).map(|i| at(i, i - 2)).collect(),
            at(1, 4),
            at(n, n - 3),
        )
    }

    /// Applies `f` to every stored scalar.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> NearlyPentaMatrix<U> {
        let conv = |v: &[T]| v.iter().map(&f).collect::<Vec<U>>();
        NearlyPentaMatrix {
            d: conv(&self.d),
            a: conv(&self.a),
            a_tilde: conv(&self.a_tilde),
            b: conv(&self.b),
            b_tilde: conv(&self.b_tilde),
            s: f(&self.s),
            t: f(&self.t),
        }
    }
}

/// Pentadiagonal stencil with `d_i = -4`, unit off-diagonals and `s = t = 0`.
pub fn gen_laplacian<T: Scalar>(n: usize) -> Result<NearlyPentaMatrix<T>> {
    if n < MIN_SIZE {
        return Err(Error::TooSmall { n });
    }
    NearlyPentaMatrix::new(
        vec![T::from_i64(-4); n],
        vec![T::one(); n - 1],
        vec![T::one(); n - 2],
        vec![T::one(); n - 1],
        vec![T::one(); n - 2],
        T::zero(),
        T::zero(),
    )
}

/// Seeded matrix with integer entries drawn uniformly from `[-9, 9]`.
///
/// With `ensure_nonsingular`, draws are repeated (from the same stream)
/// until the dense exact determinant is nonzero.
pub fn gen_random(
    n: usize,
    seed: u64,
    ensure_nonsingular: bool,
) -> Result<NearlyPentaMatrix<Rational>> {
    if n < MIN_SIZE {
        return Err(Error::TooSmall { n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = random_with(&mut rng, n)?;
        if !ensure_nonsingular || !oracle::dense_det(&m.to_dense()).is_zero() {
            return Ok(m);
        }
    }
}

fn random_with<R: Rng>(rng: &mut R, n: usize) -> Result<NearlyPentaMatrix<Rational>> {
    let mut draw = |len: usize| -> Vec<Rational> {
        (0..len)
            .map(|_| Rational::from(rng.gen_range(-9i64..=9)))
            .collect()
    };
    let d = draw(n);
    let a = draw(n - 1);
    let a_tilde = draw(n - 2);
    let b = draw(n - 1);
    let b_tilde = draw(n - 2);
    let corners = draw(2);
    let [s, t]: [Rational; 2] = corners.try_into().expect("two corners");
    NearlyPentaMatrix::new(d, a, a_tilde, b, b_tilde, s, t)
}
