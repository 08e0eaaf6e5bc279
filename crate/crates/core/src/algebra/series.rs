use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{AlgebraError, Coeff, Poly, Rational};

/// Power series in `mu` known modulo `mu^precision`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Series {
    precision: usize,
    #[serde(with = "crate::json::rational_vec")]
    coefficients: Vec<Rational>,
}

impl Series {
    pub fn zero(precision: usize) -> Self {
        Series { precision, coefficients: vec![Rational::zero(); precision] }
    }

    pub fn constant(c: Rational, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if precision > 0 {
            s.coefficients[0] = c;
        }
        s
    }

    pub fn one(precision: usize) -> Self {
        Self::constant(Rational::one(), precision)
    }

    /// The parameter `mu` itself.
    pub fn variable(precision: usize) -> Self {
        Self::monomial(Rational::one(), 1, precision)
    }

    pub fn monomial(c: Rational, k: usize, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if k < precision {
            s.coefficients[k] = c;
        }
        s
    }

    /// Truncates or zero-pads `coeffs` to the given precision.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, precision: usize) -> Self {
        coeffs.resize(precision, Rational::zero());
        Series { precision, coefficients: coeffs }
    }

    pub fn from_poly(p: &Poly, precision: usize) -> Self {
        Self::from_coeffs(p.coeffs().iter().take(precision).cloned().collect(), precision)
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coefficients[k]
    }

    pub fn coeffs_mut(&mut self) -> &mut [Rational] {
        &mut self.coefficients
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficients.first().cloned().unwrap_or_else(Rational::zero)
    }

    /// Index of the first nonzero coefficient, `None` if zero to this precision.
    pub fn valuation(&self) -> Option<usize> {
        self.coefficients.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, precision: usize) -> Self {
        let p = precision.min(self.precision);
        Series { precision: p, coefficients: self.coefficients[..p].to_vec() }
    }

    /// `mu^k * self`, keeping precision.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.precision);
        for i in 0..self.precision.saturating_sub(k) {
            out.coefficients[i + k] = self.coefficients[i].clone();
        }
        out
    }

    /// `self / mu^k` for a series divisible by `mu^k`; precision drops by `k`.
    pub fn unshift(&self, k: usize) -> Self {
        let p = self.precision.saturating_sub(k);
        Series { precision: p, coefficients: self.coefficients[k.min(self.precision)..].to_vec() }
    }

    pub fn add(&self, rhs: &Series) -> Series {
        let p = self.precision.min(rhs.precision);
        Series {
            precision: p,
            coefficients: (0..p).map(|k| &self.coefficients[k] + &rhs.coefficients[k]).collect(),
        }
    }

    pub fn sub(&self, rhs: &Series) -> Series {
        let p = self.precision.min(rhs.precision);
        Series {
            precision: p,
            coefficients: (0..p).map(|k| &self.coefficients[k] - &rhs.coefficients[k]).collect(),
        }
    }

    pub fn neg(&self) -> Series {
        Series {
            precision: self.precision,
            coefficients: self.coefficients.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            precision: self.precision,
            coefficients: self.coefficients.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Series) -> Series {
        let p = self.precision.min(rhs.precision);
        let (a, da) = integral(&self.coefficients[..p]);
        let (b, db) = integral(&rhs.coefficients[..p]);
        let mut acc = vec![BigInt::zero(); p];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().take(p - i).enumerate() {
                if !y.is_zero() {
                    acc[i + j] += x * y;
                }
            }
        }
        let den = da * db;
        let coefficients = acc.into_iter().map(|c| Rational::new(c, den.clone())).collect();
        Series { precision: p, coefficients }
    }

    pub fn invert(&self) -> Result<Series, AlgebraError> {
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(AlgebraError::NonUnitInverse);
        }
        let inv0 = a0.recip();
        let p = self.precision;
        let mut out: Vec<Rational> = Vec::with_capacity(p);
        if p > 0 {
            out.push(inv0.clone());
        }
        for k in 1..p {
            let mut acc = Rational::zero();
            for j in 1..=k {
                let a = &self.coefficients[j];
                if !a.is_zero() {
                    acc += a * &out[k - j];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(Series { precision: p, coefficients: out })
    }

    pub fn pow(&self, k: u32) -> Series {
        let mut acc = Series::one(self.precision);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `self(inner(mu))`, `inner` without constant term.
    pub fn compose(&self, inner: &Series) -> Result<Series, AlgebraError> {
        if !inner.constant_term().is_zero() {
            return Err(AlgebraError::NonNilpotentInner);
        }
        let p = self.precision.min(inner.precision);
        let mut acc = Series::zero(p);
        for c in self.coefficients.iter().take(p).rev() {
            acc = acc.mul(inner);
            acc.coefficients[0] += c;
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// Largest `k <= max_k` such that only exponents divisible by `k` occur.
    pub fn exponent_stride(&self, max_k: usize) -> usize {
        (1..=max_k)
            .rev()
            .find(|&k| {
                self.coefficients.iter().enumerate().all(|(e, c)| e % k == 0 || c.is_zero())
            })
            .unwrap_or(1)
    }
}

/// Integer numerators over a common denominator.
fn integral(cs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let den = cs.iter().fold(BigInt::one(), |l, c| if c.denom().is_one() { l } else { l.lcm(c.denom()) });
    let nums = cs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    (nums, den)
}

impl Coeff for Series {
    fn zero_like(&self) -> Self {
        Series::zero(self.precision)
    }
    fn one_like(&self) -> Self {
        Series::one(self.precision)
    }
    fn rational_like(&self, r: &Rational) -> Self {
        Series::constant(r.clone(), self.precision)
    }
    fn vanishes(&self) -> bool {
        Series::is_zero(self)
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

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> =
            self.coefficients.iter().take(6).map(ToString::to_string).collect();
        write!(f, "Series[{} + O(mu^{})]", shown.join(", "), self.precision)
    }
}
