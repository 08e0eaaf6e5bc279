use num_traits::{One, Zero};
use serde::Serialize;

use super::{check_n, FamilyError};
use crate::algebra::{chebyshev_t, rat, rint, Poly, Rational};

/// `x = X^n / Q(X)`, the cover carrying the first two branch points.
#[derive(Debug, Clone, Serialize)]
pub struct PadeCover {
    pub n: usize,
    /// `Q(X) = n(n-1)/2 (X^2 + beta1 X + beta0)`.
    pub denominator: Poly,
    #[serde(with = "crate::json::rational")]
    pub gamma: Rational,
    #[serde(with = "crate::json::rational")]
    pub beta1: Rational,
    #[serde(with = "crate::json::rational")]
    pub beta0: Rational,
    /// `(X^n - Q) / (X - 1)^3`.
    pub cofactor: Poly,
    /// Multiplicity patterns over `x = 0, 1, infinity`.
    pub patterns: [Vec<usize>; 3],
}

fn fail(msg: String) -> FamilyError {
    FamilyError::RamificationCheckFailed(msg)
}

fn cube_at_one() -> Poly {
    Poly::from_ints(&[-1, 3, -3, 1])
}

/// Root multiplicities of `p` over the algebraic closure, including those at infinity
/// relative to `degree`.
fn pattern_with_infinity(p: &Poly, degree: usize) -> Vec<usize> {
    let mut pat = p.multiplicity_pattern();
    let d = p.degree().unwrap_or(0);
    if d < degree {
        pat.push(degree - d);
    }
    pat.sort_unstable_by(|a, b| b.cmp(a));
    pat
}

pub fn pade_degenerate(n: usize) -> Result<PadeCover, FamilyError> {
    check_n(n)?;
    let ni = n as i64;
    let gamma = rat(ni * (ni - 1), 2);
    let beta1 = rat(-2 * (ni - 2), ni - 1);
    let beta0 = rat(ni - 2, ni);
    let denominator = Poly::new(vec![beta0.clone(), beta1.clone(), Rational::one()]).scale(&gamma);

    let one = Rational::one();
    let q1 = denominator.eval(&one);
    let dq = denominator.derivative();
    if q1 != one || dq.eval(&one) != rint(ni) || dq.derivative().eval(&one) != rint(ni * (ni - 1)) {
        return Err(fail(format!("denominator lacks order-3 contact with X^{n} at 1")));
    }
    let diff = &Poly::monomial(one.clone(), n) - &denominator;
    if diff.root_multiplicity(&one) != 3 {
        return Err(fail("X^n - Q does not vanish to order exactly 3 at X = 1".into()));
    }
    let (cofactor, rem) = diff.divrem(&cube_at_one())?;
    if !rem.is_zero() || !cofactor.is_squarefree() || cofactor.eval(&one).is_zero() {
        return Err(fail("cofactor of (X - 1)^3 is not squarefree away from 1".into()));
    }
    if !denominator.is_squarefree() || denominator.eval(&Rational::zero()).is_zero() {
        return Err(fail("denominator has a repeated root or vanishes at 0".into()));
    }
    let patterns = [
        pattern_with_infinity(&Poly::monomial(one, n), n),
        pattern_with_infinity(&diff, n),
        pattern_with_infinity(&denominator, n),
    ];
    let expected_one = {
        let mut v = vec![3];
        v.extend(std::iter::repeat_n(1, n - 3));
        v
    };
    let expected_inf = vec![n - 2, 1, 1];
    if patterns[0] != vec![n] || patterns[1] != expected_one || patterns[2] != expected_inf {
        return Err(fail(format!("unexpected branch patterns {patterns:?}")));
    }
    Ok(PadeCover { n, denominator, gamma, beta1, beta0, cofactor, patterns })
}

/// `y = (T_n(2Y - 1) + 1) / 2`, the cover carrying the last two branch points.
#[derive(Debug, Clone, Serialize)]
pub struct ChebyshevCover {
    pub n: usize,
    pub y: Poly,
    /// Multiplicity patterns over `y = 0, 1, infinity`.
    pub patterns: [Vec<usize>; 3],
}

pub fn chebyshev_degenerate(n: usize) -> Result<ChebyshevCover, FamilyError> {
    check_n(n)?;
    let t = chebyshev_t(n);
    let y = (&t.compose(&Poly::from_ints(&[-1, 2])) + &Poly::one()).scale(&rat(1, 2));
    let y1 = &y - &Poly::one();
    let h = n / 2;
    let zero = Rational::zero();
    let one = Rational::one();
    if y1.root_multiplicity(&zero) != 1 || y1.root_multiplicity(&one) != 1 {
        return Err(fail("y - 1 must have simple roots at 0 and 1".into()));
    }
    if y.gcd(&y.derivative()).degree() != Some(h) {
        return Err(fail("y is not a perfect square of a squarefree polynomial".into()));
    }
    let patterns = [
        pattern_with_infinity(&y, n),
        pattern_with_infinity(&y1, n),
        vec![n],
    ];
    let mut expected_one = vec![2; h - 1];
    expected_one.extend([1, 1]);
    if patterns[0] != vec![2; h] || patterns[1] != expected_one || y.degree() != Some(n) {
        return Err(fail(format!("unexpected branch patterns {patterns:?}")));
    }
    Ok(ChebyshevCover { n, y, patterns })
}
