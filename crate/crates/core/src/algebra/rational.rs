use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rint(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Accepts `"p/q"`, `"p"`, and surrounding whitespace.
pub fn parse_rational(text: &str) -> Result<Rational, AlgebraError> {
    let t = text.trim();
    let err = || AlgebraError::ParseRational(text.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(t.parse().map_err(|_| err())?)),
    }
}

/// The rational with the smallest denominator in the open interval `(lo, hi)`,
/// found by walking the Stern–Brocot tree.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo < hi, "empty interval");
    if lo.is_negative() && hi.is_positive() {
        return Rational::zero();
    }
    if !lo.is_negative() {
        simplest_positive(lo, hi)
    } else {
        -simplest_positive(&-hi, &-lo)
    }
}

// lo >= 0, open interval
fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    let candidate = &fl + Rational::one();
    if candidate < *hi {
        return candidate;
    }
    if &fl == lo {
        // interval (k, hi) with hi <= k + 1: need k + 1/m < hi
        // recurse on reciprocal of the fractional part
        let rest_hi = Rational::one() / (hi - &fl);
        let m = rest_hi.floor() + Rational::one();
        return fl + Rational::one() / m;
    }
    // both in (k, k+1]
    let a = lo - &fl;
    let b = hi - &fl;
    let inner = simplest_positive(&(Rational::one() / &b), &(Rational::one() / &a));
    fl + Rational::one() / inner
}

pub(crate) fn lcm_of_denominators<'a, I: IntoIterator<Item = &'a Rational>>(it: I) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}
