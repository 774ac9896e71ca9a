use super::{Rational, Scalar};
use crate::error::{Error, Result};
use std::fmt;

/// Univariate polynomial in `x` with rational coefficients.
///
/// `coeffs[k]` is the coefficient of `x^k`. The leading coefficient is never
/// zero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Polynomial::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// Builds from coefficients in increasing degree, trimming leading zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k).add(&rhs.coeff(k))).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k).sub(&rhs.coeff(k))).collect())
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Polynomial::zero(),
            Some(lc) => {
                let inv = lc.recip().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let d_deg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let d_lead_inv = divisor.coeffs[d_deg].recip()?;
        let mut rem = self.coeffs.clone();
        let q_len = rem.len().saturating_sub(d_deg);
        let mut quot = vec![Rational::zero(); q_len];
        for k in (0..q_len).rev() {
            let top = rem[k + d_deg].mul(&d_lead_inv);
            if top.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&top.mul(dc));
            }
            quot[k] = top;
        }
        rem.truncate(d_deg);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc.mul(at).add(c))
    }

    /// Constant term, i.e. the value at `x = 0`.
    pub fn at_zero(&self) -> Rational {
        self.coeff(0)
    }
}

/// Monic greatest common divisor by the Euclidean algorithm.
///
/// `gcd(p, 0) = monic(p)` and `gcd(0, 0) = 0`.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
        a = b;
        b = r;
    }
    a.monic()
}

impl fmt::Display for Polynomial {
    /// Terms in decreasing degree, e.g. `4589918*x - 4092987`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag == Rational::one();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
