//! Solvers for nearly pentadiagonal linear systems `A x = y`: pentadiagonal
//! matrices with two extra corner entries at (1, 4) and (n, n-3).
//!
//! * [`factor`]: O(n) specialized LU, substitutions and the determinant as
//!   the product of pivots, generic over any [`scalar::Scalar`].
//! * [`symbolic`]: reruns the recurrences over rational functions in `x`,
//!   replacing zero pivots by `x`, and substitutes `x = 0` at the end.
//! * [`oracle`]: dense exact Gaussian elimination used as a reference.
//!
//! ```
//! use nearpenta::matrix::gen_laplacian;
//! use nearpenta::factor::solve_knpenta;
//! use nearpenta::scalar::Rational;
//!
//! let m = gen_laplacian::<Rational>(6).unwrap();
//! let y: Vec<Rational> = (1..=6).map(Rational::from).collect();
//! let report = solve_knpenta(&m, &y).unwrap();
//! assert_eq!(nearpenta::factor::band_matvec(&m, &report.x).unwrap(), y);
//! ```

pub mod cli;
pub mod error;
pub mod factor;
pub mod json;
pub mod matrix;
pub mod oracle;
pub mod scalar;
pub mod symbolic;

pub use error::{Error, Result};
pub use factor::{factorize, solve_knpenta, Factorization, Mode, SolveReport};
pub use matrix::NearlyPentaMatrix;
pub use scalar::{Polynomial, Rational, RationalFunction, Scalar};
pub use symbolic::{solve_auto, solve_ksnpenta};
