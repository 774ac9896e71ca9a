use super::{poly_gcd, Polynomial, Rational, Scalar};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// Quotient of two polynomials in `x`, kept in canonical form: numerator
/// and denominator coprime, denominator monic, zero stored as `0/1`.
///
/// Every arithmetic result is renormalized immediately, so two equal
/// functions always compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Canonical form of `num / den`.
    pub fn normalize(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(Polynomial::zero()));
        }
        let (num, den) = if den.is_constant() || num.is_constant() {
            (num, den)
        } else if den.degree() == Some(1) || num.degree() == Some(1) {
            cancel_linear(num, den)
        } else {
            let g = poly_gcd(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                let (n, _) = num.div_rem(&g)?;
                let (d, _) = den.div_rem(&g)?;
                (n, d)
            }
        };
        let lead = den.leading().expect("denominator is nonzero").clone();
        if lead == Rational::one() {
            return Ok(RationalFunction { num, den });
        }
        let inv = lead.recip()?;
        Ok(RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    /// Builds from a numerator and a monic denominator already coprime to it.
    fn reduced_unchecked(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    /// The indeterminate `x` that replaces vanishing pivots.
    pub fn x() -> Self {
        Self::from_poly(Polynomial::x())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    /// Largest of the numerator and denominator degrees (0 for zero).
    pub fn degree(&self) -> usize {
        self.num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0))
    }

    /// `num(0) / den(0)`; fails with `PoleAtZero` when `den(0) = 0`.
    pub fn eval_at_zero(&self) -> Result<Rational> {
        let d = self.den.at_zero();
        if d.is_zero() {
            return Err(Error::PoleAtZero);
        }
        self.num.at_zero().div(&d)
    }

    /// Rescales numerator and denominator by a common rational so the
    /// denominator has coprime integer coefficients with positive leading
    /// term. Used for display only; the value is unchanged.
    fn cleared(&self) -> (Polynomial, Polynomial) {
        let mut lcm = BigInt::one();
        for c in self.den.coeffs() {
            lcm = lcm.lcm(c.denom());
        }
        let scaled = self.den.scale(&Rational::integer(lcm.clone()));
        let mut content = BigInt::zero();
        for c in scaled.coeffs() {
            content = content.gcd(c.numer());
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        let k = Rational::new(lcm, content).expect("content is nonzero");
        (self.num.scale(&k), self.den.scale(&k))
    }
}

/// Cancels the only possible common factor when one side is linear: the
/// gcd is nontrivial iff the other side vanishes at the linear root.
fn cancel_linear(num: Polynomial, den: Polynomial) -> (Polynomial, Polynomial) {
    let linear = if den.degree() == Some(1) { &den } else { &num };
    let root = linear
        .coeff(0)
        .neg()
        .div(&linear.coeff(1))
        .expect("linear coefficient is nonzero");
    if !num.eval(&root).is_zero() || !den.eval(&root).is_zero() {
        return (num, den);
    }
    let factor = Polynomial::new(vec![root.neg(), Rational::one()]);
    let (n, _) = num.div_rem(&factor).expect("factor is nonzero");
    let (d, _) = den.div_rem(&factor).expect("factor is nonzero");
    (n, d)
}

impl fmt::Display for RationalFunction {
    /// `(<num>)/(<den>)` with the denominator cleared to integers, e.g.
    /// `(-4092987)/(4589918*x - 4092987)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.cleared();
        write!(f, "({n})/({d})")
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Scalar for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }
    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    fn add(&self, rhs: &Self) -> Self {
        let one = Polynomial::one();
        // p + n/d = (p d + n)/d is already coprime when n/d is.
        if self.den == one {
            let num = self.num.mul(&rhs.den).add(&rhs.num);
            return Self::reduced_unchecked(num, rhs.den.clone());
        }
        if rhs.den == one {
            let num = rhs.num.mul(&self.den).add(&self.num);
            return Self::reduced_unchecked(num, self.den.clone());
        }
        if self.den == rhs.den {
            return Self::normalize(self.num.add(&rhs.num), self.den.clone())
                .expect("denominator is nonzero");
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        Self::normalize(num, self.den.mul(&rhs.den)).expect("denominator is nonzero")
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let one = Polynomial::one();
        if self.den == one && rhs.den == one {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        Self::normalize(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
            .expect("denominator is nonzero")
    }

    fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::normalize(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    /// Symbolic zero: the canonical numerator is the zero polynomial.
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_exact() -> bool {
        true
    }

    fn from_i64(v: i64) -> Self {
        Self::constant(Rational::from(v))
    }
}
