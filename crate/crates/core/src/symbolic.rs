//! Zero-pivot rescue over the field of rational functions in `x`.
//!
//! The factorization recurrences are rerun with every entry lifted to a
//! constant rational function. Any pivot that is identically zero is
//! replaced by the indeterminate `x` (one symbol for all of them). This
//! is the exact LU of `A + x * sum(E_kk)` over the rescued indices `k`, so
//! the solution and determinant are rational functions of `x` whose
//! values at `x = 0` are those of `A` whenever `A` is nonsingular.

use crate::error::{Error, Result};
use crate::factor::{factorize_with, solve_knpenta, Factorization, Mode, SolveReport};
use crate::matrix::NearlyPentaMatrix;
use crate::scalar::{Rational, RationalFunction, Scalar};

/// Pre-substitution values from a symbolic solve.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicTrace {
    /// Solution components as rational functions of `x`.
    pub x: Vec<RationalFunction>,
    /// Product of the (possibly rescued) pivots.
    pub det: RationalFunction,
    pub factorization: Factorization<RationalFunction>,
    /// 1-based indices of pivots replaced by `x`.
    pub zero_pivots: Vec<usize>,
    /// Largest numerator/denominator degree seen in the factors, the
    /// forward-substitution vector and the solution.
    pub max_degree: usize,
}

/// Symbolic factorization with rescued pivots.
pub fn factorize_symbolic(
    m: &NearlyPentaMatrix<Rational>,
) -> Result<(Factorization<RationalFunction>, Vec<usize>)> {
    let lifted = m.map(|v| RationalFunction::constant(v.clone()));
    let mut rescued = Vec::new();
    // The d_1 slot is never read after c_1 is formed, so only the pivot is
    // replaced here; the caller's matrix is left untouched.
    let lu = factorize_with(&lifted, |i, c| {
        if c.is_zero() {
            rescued.push(i);
            Ok(RationalFunction::x())
        } else {
            Ok(c)
        }
    })?;
    Ok((lu, rescued))
}

fn max_degree_of(
    lu: &Factorization<RationalFunction>,
    z: &[RationalFunction],
    x: &[RationalFunction],
) -> usize {
    let n = lu.n();
    let mut values: Vec<&RationalFunction> = Vec::new();
    for i in 1..=n {
        values.extend([lu.c(i), lu.e(i), lu.f(i)]);
    }
    values.extend((3..n).map(|i| lu.r(i)));
    values.extend((1..=n - 2).map(|i| lu.a_tilde(i)));
    values.push(lu.g());
    values.extend(z);
    values.extend(x);
    values
        .into_iter()
        .map(RationalFunction::degree)
        .max()
        .unwrap_or(0)
}

/// Solves symbolically and keeps the pre-substitution values.
pub fn solve_ksnpenta_traced(
    m: &NearlyPentaMatrix<Rational>,
    y: &[Rational],
) -> Result<(SolveReport<Rational>, SymbolicTrace)> {
    let n = m.n();
    if y.len() != n {
        return Err(Error::LengthMismatch {
            what: "y",
            expected: n,
            actual: y.len(),
        });
    }
    let (lu, zero_pivots) = factorize_symbolic(m)?;
    let y_sym: Vec<RationalFunction> = y.iter().cloned().map(RationalFunction::constant).collect();
    let z = lu.forward_substitute(&y_sym)?;
    let x_sym = lu.back_substitute(&z)?;
    let det_sym = lu.determinant();

    let det = det_sym.eval_at_zero().map_err(|_| Error::SingularMatrix)?;
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let x = x_sym
        .iter()
        .map(|v| v.eval_at_zero().map_err(|_| Error::SingularMatrix))
        .collect::<Result<Vec<_>>>()?;

    let max_degree = max_degree_of(&lu, &z, &x_sym);
    let report = SolveReport {
        x,
        det,
        mode: Mode::Symbolic,
        zero_pivots: zero_pivots.clone(),
        residual_norm: None,
    };
    let trace = SymbolicTrace {
        x: x_sym,
        det: det_sym,
        factorization: lu,
        zero_pivots,
        max_degree,
    };
    Ok((report, trace))
}

/// Symbolic solve, substituting `x = 0` at the end.
///
/// Fails with `SingularMatrix` when the determinant vanishes at `x = 0` or
/// a solution component has a pole there.
pub fn solve_ksnpenta(
    m: &NearlyPentaMatrix<Rational>,
    y: &[Rational],
) -> Result<SolveReport<Rational>> {
    solve_ksnpenta_traced(m, y).map(|(report, _)| report)
}

/// Exact solve, falling back to the symbolic path on a zero pivot.
pub fn solve_auto(
    m: &NearlyPentaMatrix<Rational>,
    y: &[Rational],
) -> Result<SolveReport<Rational>> {
    match solve_knpenta(m, y) {
        Err(Error::ZeroPivot(_)) => solve_ksnpenta(m, y),
        other => other,
    }
}

/// Determinant through the symbolic factorization, evaluated at `x = 0`.
/// Returns the rescued pivot indices alongside.
pub fn determinant_symbolic(m: &NearlyPentaMatrix<Rational>) -> Result<(Rational, Vec<usize>)> {
    let (lu, rescued) = factorize_symbolic(m)?;
    let det = lu.determinant().eval_at_zero()?;
    Ok((det, rescued))
}
