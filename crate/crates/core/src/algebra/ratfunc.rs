use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{AlgebraError, Coeff, Poly, Rational};

/// Reduced quotient of polynomials in `T` with a monic denominator.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFunc {
    numerator: Poly,
    denominator: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZeroPoly);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let lc = den.leading().recip();
        Ok(RatFunc { numerator: num.scale(&lc), denominator: den.scale(&lc) })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { numerator: p, denominator: Poly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn variable() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }

    pub fn is_one(&self) -> bool {
        self.is_polynomial() && self.numerator.degree() == Some(0) && self.numerator.coeff(0).is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.degree() == Some(0)
    }

    /// `max(deg num, deg den)`, the degree as a map of the line.
    pub fn degree(&self) -> usize {
        self.numerator.degree().unwrap_or(0).max(self.denominator.degree().unwrap_or(0))
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational, AlgebraError> {
        let d = self.denominator.eval(t);
        if d.is_zero() {
            return Err(AlgebraError::PoleAt(t.to_string()));
        }
        Ok(self.numerator.eval(t) / d)
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.numerator * &rhs.denominator) + &(&rhs.numerator * &self.denominator);
        Self::new(num, &self.denominator * &rhs.denominator).expect("nonzero denominator")
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { numerator: -&self.numerator, denominator: self.denominator.clone() }
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        Self::new(&self.numerator * &rhs.numerator, &self.denominator * &rhs.denominator)
            .expect("nonzero denominator")
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc, AlgebraError> {
        if rhs.numerator.is_zero() {
            return Err(AlgebraError::DivisionByZeroPoly);
        }
        Self::new(&self.numerator * &rhs.denominator, &self.denominator * &rhs.numerator)
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { numerator: self.numerator.scale(c), denominator: self.denominator.clone() }
    }

    pub fn pow(&self, k: u32) -> RatFunc {
        RatFunc { numerator: self.numerator.pow(k), denominator: self.denominator.pow(k) }
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_polynomial() {
            return self.numerator.to_string_var(var);
        }
        format!(
            "({})/({})",
            self.numerator.to_string_var(var),
            self.denominator.to_string_var(var)
        )
    }
}

impl Coeff for RatFunc {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn rational_like(&self, r: &Rational) -> Self {
        Self::constant(r.clone())
    }
    fn vanishes(&self) -> bool {
        self.numerator.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("T"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc { numerator: Poly::zero(), denominator: Poly::one() }
    }
}
