//! Scalar fields the solvers are generic over.
//!
//! Three realizations are provided: `f64` for fast numeric work,
//! [`Rational`] for exact arithmetic, and [`RationalFunction`] (rational
//! functions in one indeterminate `x` over the rationals) for the symbolic
//! zero-pivot rescue.

mod poly;
mod ratfunc;
mod rational;

pub use poly::{poly_gcd, Polynomial};
pub use ratfunc::RationalFunction;
pub use rational::Rational;

use crate::error::Result;
use std::fmt::Debug;

/// Field operations required by the factorization and the substitutions.
///
/// Values are immutable; every operation returns a fresh value. Exact
/// realizations always return canonical forms so `PartialEq` is structural
/// equality of field elements.
pub trait Scalar: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Exact realizations fail with `DivisionByZero` on a zero divisor;
    /// `f64` follows IEEE semantics.
    fn div(&self, rhs: &Self) -> Result<Self>;

    fn is_zero(&self) -> bool;

    /// True for realizations where arithmetic is exact.
    fn is_exact() -> bool;

    /// Pivot test used by the factorization. Exact fields ignore `tol`;
    /// `f64` treats `|v| <= tol` as zero (so `tol = 0` is an exact test).
    fn is_negligible(&self, tol: f64) -> bool {
        let _ = tol;
        self.is_zero()
    }

    /// Magnitude as a float, when the realization has one.
    fn magnitude(&self) -> Option<f64> {
        None
    }

    fn from_i64(v: i64) -> Self;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self / rhs)
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn is_exact() -> bool {
        false
    }
    fn is_negligible(&self, tol: f64) -> bool {
        self.abs() <= tol
    }
    fn magnitude(&self) -> Option<f64> {
        Some(self.abs())
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
}
