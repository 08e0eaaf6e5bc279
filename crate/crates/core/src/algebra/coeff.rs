use std::fmt;

use num_traits::{One, Zero};

use super::Rational;

/// Commutative ring of coefficients for the generic model polynomials.
///
/// Elements that carry context (series precision) build constants with the
/// `*_like` constructors.
pub trait Coeff: Clone + fmt::Debug + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn rational_like(&self, r: &Rational) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;
}

impl Coeff for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn rational_like(&self, r: &Rational) -> Self {
        r.clone()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }
}

/// Dense univariate polynomials over any [`Coeff`], as plain coefficient
/// slices, lowest degree first. No normalization is performed: lengths are
/// part of the shape the caller expects.
pub mod upoly {
    use super::Coeff;
    use crate::algebra::Rational;

    pub fn mul<K: Coeff>(p: &[K], q: &[K]) -> Vec<K> {
        if p.is_empty() || q.is_empty() {
            return Vec::new();
        }
        let zero = p[0].zero_like();
        let mut out = vec![zero; p.len() + q.len() - 1];
        for (i, a) in p.iter().enumerate() {
            if a.vanishes() {
                continue;
            }
            for (j, b) in q.iter().enumerate() {
                if b.vanishes() {
                    continue;
                }
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        out
    }

    pub fn add<K: Coeff>(p: &[K], q: &[K]) -> Vec<K> {
        let (long, short) = if p.len() >= q.len() { (p, q) } else { (q, p) };
        let mut out = long.to_vec();
        for (o, s) in out.iter_mut().zip(short) {
            *o = o.plus(s);
        }
        out
    }

    pub fn sub<K: Coeff>(p: &[K], q: &[K]) -> Vec<K> {
        add(p, &neg(q))
    }

    pub fn neg<K: Coeff>(p: &[K]) -> Vec<K> {
        p.iter().map(Coeff::negated).collect()
    }

    pub fn scale<K: Coeff>(p: &[K], c: &K) -> Vec<K> {
        p.iter().map(|a| a.times(c)).collect()
    }

    pub fn scale_rational<K: Coeff>(p: &[K], c: &Rational) -> Vec<K> {
        p.iter().map(|a| a.scaled(c)).collect()
    }

    /// `X^k p(X)`.
    pub fn shift<K: Coeff>(p: &[K], k: usize) -> Vec<K> {
        match p.first() {
            None => Vec::new(),
            Some(c) => {
                let mut out = vec![c.zero_like(); k];
                out.extend_from_slice(p);
                out
            }
        }
    }

    /// Monic polynomial from its non-leading coefficients.
    pub fn monic_from_lower<K: Coeff>(lower: &[K], like: &K) -> Vec<K> {
        let mut out = lower.to_vec();
        out.push(like.one_like());
        out
    }

    pub fn eval<K: Coeff>(p: &[K], x: &K) -> K {
        let mut acc = x.zero_like();
        for c in p.iter().rev() {
            acc = acc.times(x).plus(c);
        }
        acc
    }

    /// `p(a X + b)`.
    pub fn compose_affine<K: Coeff>(p: &[K], a: &K, b: &K) -> Vec<K> {
        let lin = vec![b.clone(), a.clone()];
        let mut acc: Vec<K> = vec![a.zero_like()];
        for c in p.iter().rev() {
            acc = add(&mul(&acc, &lin), std::slice::from_ref(c));
        }
        acc.truncate(p.len().max(1));
        acc
    }

    /// Drops trailing coefficients that are zero.
    pub fn trim<K: Coeff>(mut p: Vec<K>) -> Vec<K> {
        while p.last().is_some_and(Coeff::vanishes) {
            p.pop();
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::upoly;
    use crate::algebra::{rint, Rational};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rint(x)).collect()
    }

    #[test]
    fn generic_ops_over_rationals() {
        let p = v(&[1, 2, 3]);
        let q = v(&[-1, 1]);
        assert_eq!(upoly::mul(&p, &q), v(&[-1, -1, -1, 3]));
        assert_eq!(upoly::add(&p, &q), v(&[0, 3, 3]));
        assert_eq!(upoly::eval(&p, &rint(2)), rint(17));
        // p(2X - 1) = 1 + 2(2X-1) + 3(2X-1)^2 = 12X^2 - 8X + 2
        assert_eq!(upoly::compose_affine(&p, &rint(2), &rint(-1)), v(&[2, -8, 12]));
        assert_eq!(upoly::shift(&q, 2), v(&[0, 0, -1, 1]));
        assert_eq!(upoly::trim(v(&[1, 0, 0])), v(&[1]));
    }
}
