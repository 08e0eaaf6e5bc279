//! Real root counting with Sturm sequences.

use num_traits::{Signed, Zero};

use super::{AlgebraError, Poly, Rational};

/// An endpoint of a real interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl From<Rational> for Bound {
    fn from(r: Rational) -> Self {
        Bound::Finite(r)
    }
}

/// Sturm sequence of the squarefree part of `p`.
pub fn sturm_sequence(p: &Poly) -> Result<Vec<Poly>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let p0 = p.squarefree_part();
    let mut seq = vec![p0.clone(), p0.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].divrem(&seq[n - 1])?;
        if r.is_zero() {
            break;
        }
        // only the sign of each term matters
        let r = -&r.content_normalized_positive();
        seq.push(r);
    }
    Ok(seq)
}

fn sign_at(p: &Poly, b: &Bound) -> i8 {
    match b {
        Bound::Finite(x) => {
            let v = p.eval(x);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        }
        Bound::PosInfinity | Bound::NegInfinity => {
            let Some(d) = p.degree() else { return 0 };
            let lead = if p.leading().is_positive() { 1 } else { -1 };
            if matches!(b, Bound::NegInfinity) && d % 2 == 1 {
                -lead
            } else {
                lead
            }
        }
    }
}

fn variations(seq: &[Poly], b: &Bound) -> usize {
    let signs: Vec<i8> = seq.iter().map(|p| sign_at(p, b)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in `(a, b]`.
pub fn sturm_count(p: &Poly, a: &Bound, b: &Bound) -> Result<usize, AlgebraError> {
    let seq = sturm_sequence(p)?;
    let va = variations(&seq, a);
    let vb = variations(&seq, b);
    Ok(va.saturating_sub(vb))
}

/// Number of distinct real roots of `p`.
pub fn real_root_count(p: &Poly) -> Result<usize, AlgebraError> {
    sturm_count(p, &Bound::NegInfinity, &Bound::PosInfinity)
}

/// Counts real roots with multiplicity: total over the squarefree decomposition.
pub fn real_root_count_with_multiplicity(p: &Poly) -> Result<usize, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let mut total = 0;
    for (i, f) in p.squarefree_decomposition().iter().enumerate() {
        if f.degree().unwrap_or(0) > 0 {
            total += (i + 1) * real_root_count(f)?;
        }
    }
    Ok(total)
}

/// Isolating intervals `(lo, hi]` of width below `width` for the distinct real roots.
pub fn isolate_real_roots(p: &Poly, width: &Rational) -> Result<Vec<(Rational, Rational)>, AlgebraError> {
    let seq = sturm_sequence(p)?;
    let bound = cauchy_bound(&seq[0]);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let c = variations(&seq, &Bound::Finite(lo.clone()))
            .saturating_sub(variations(&seq, &Bound::Finite(hi.clone())));
        if c == 0 {
            continue;
        }
        if c == 1 && &(&hi - &lo) < width {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort();
    Ok(out)
}

fn cauchy_bound(p: &Poly) -> Rational {
    let lead = p.leading().abs();
    let m = p.coeffs().iter().map(|c| c.abs() / &lead).max().unwrap_or_else(Rational::zero);
    m + Rational::from_integer(1.into())
}

impl Poly {
    /// Scalar multiple with integer coprime coefficients and positive leading term.
    pub(crate) fn content_normalized_positive(&self) -> Poly {
        let p = self.content_normalized();
        if p.leading().is_negative() != self.leading().is_negative() {
            -&p
        } else {
            p
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rint};

    #[test]
    fn counts_on_intervals() {
        // (X-1)(X-2)(X+3)
        let p = Poly::from_ints(&[6, -7, 0, 1]);
        assert_eq!(real_root_count(&p).unwrap(), 3);
        assert_eq!(sturm_count(&p, &rint(0).into(), &rint(2).into()).unwrap(), 2);
        assert_eq!(sturm_count(&p, &rint(1).into(), &rint(2).into()).unwrap(), 1);
        assert_eq!(sturm_count(&p, &Bound::NegInfinity, &rint(0).into()).unwrap(), 1);
        let q = Poly::from_ints(&[1, 0, 1]);
        assert_eq!(real_root_count(&q).unwrap(), 0);
        assert!(real_root_count(&Poly::zero()).is_err());
    }

    #[test]
    fn multiplicities() {
        // (X-1)^3 (X^2+1) (X+2)
        let p = Poly::from_ints(&[-1, 3, -3, 1]) * Poly::from_ints(&[1, 0, 1]) * Poly::from_ints(&[2, 1]);
        assert_eq!(real_root_count(&p).unwrap(), 2);
        assert_eq!(real_root_count_with_multiplicity(&p).unwrap(), 4);
    }

    #[test]
    fn isolation() {
        let p = Poly::from_ints(&[-2, 0, 1]);
        let iv = isolate_real_roots(&p, &rat(1, 100)).unwrap();
        assert_eq!(iv.len(), 2);
        let (lo, hi) = &iv[1];
        assert!(lo * lo < rint(2) && hi * hi >= rint(2));
    }
}
