use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::degenerate::{chebyshev_degenerate, pade_degenerate};
use super::{check_n, FamilyError};
use crate::algebra::{chebyshev_u, rint, upoly, Coeff, Poly, Rational};

/// A degree-`n` map `S = S0 / S_inf` with
/// `S0 - S_inf = S1` and `S0 - lambda S_inf = S_lambda`, where
///
/// * `S0 = A(X)^2`, `A` monic of degree `h`,
/// * `S1 = (X - 1)^3 D(X)`, `D` monic of degree `n - 3`,
/// * `S_inf = gamma (X^2 + beta1 X + beta0)`,
/// * `S_lambda = q(X) E(X)^2`, `q` monic quadratic, `E` monic of degree `h - 1`.
///
/// Every polynomial is stored by its non-leading coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverModel<K> {
    pub n: usize,
    pub alpha: Vec<K>,
    pub beta0: K,
    pub beta1: K,
    pub gamma: K,
    pub delta: Vec<K>,
    pub quad: Vec<K>,
    pub eta: Vec<K>,
    pub lambda: K,
}

/// A model normalized by `alpha_{h-1} = 0`; the coefficients are in the parameter.
pub type NormalizedModel<K> = CoverModel<K>;

impl<K: Coeff> CoverModel<K> {
    pub fn map<L>(&self, f: impl Fn(&K) -> L) -> CoverModel<L> {
        CoverModel {
            n: self.n,
            alpha: self.alpha.iter().map(&f).collect(),
            beta0: f(&self.beta0),
            beta1: f(&self.beta1),
            gamma: f(&self.gamma),
            delta: self.delta.iter().map(&f).collect(),
            quad: self.quad.iter().map(&f).collect(),
            eta: self.eta.iter().map(&f).collect(),
            lambda: f(&self.lambda),
        }
    }

    pub fn try_map<L, E>(&self, f: impl Fn(&K) -> Result<L, E>) -> Result<CoverModel<L>, E> {
        let all = |v: &[K]| v.iter().map(&f).collect::<Result<Vec<_>, E>>();
        Ok(CoverModel {
            n: self.n,
            alpha: all(&self.alpha)?,
            beta0: f(&self.beta0)?,
            beta1: f(&self.beta1)?,
            gamma: f(&self.gamma)?,
            delta: all(&self.delta)?,
            quad: all(&self.quad)?,
            eta: all(&self.eta)?,
            lambda: f(&self.lambda)?,
        })
    }

    /// Named coefficients in a fixed order.
    pub fn named(&self) -> Vec<(String, &K)> {
        let mut v: Vec<(String, &K)> = Vec::new();
        v.extend(self.alpha.iter().enumerate().map(|(i, c)| (format!("alpha{i}"), c)));
        v.push(("beta0".into(), &self.beta0));
        v.push(("beta1".into(), &self.beta1));
        v.push(("gamma".into(), &self.gamma));
        v.extend(self.delta.iter().enumerate().map(|(i, c)| (format!("delta{i}"), c)));
        v.extend(self.quad.iter().enumerate().map(|(i, c)| (format!("q{i}"), c)));
        v.extend(self.eta.iter().enumerate().map(|(i, c)| (format!("eta{i}"), c)));
        v.push(("lambda".into(), &self.lambda));
        v
    }

    fn like(&self) -> &K {
        &self.gamma
    }

    pub fn a_poly(&self) -> Vec<K> {
        upoly::monic_from_lower(&self.alpha, self.like())
    }

    pub fn d_poly(&self) -> Vec<K> {
        upoly::monic_from_lower(&self.delta, self.like())
    }

    pub fn e_poly(&self) -> Vec<K> {
        upoly::monic_from_lower(&self.eta, self.like())
    }

    pub fn q_poly(&self) -> Vec<K> {
        upoly::monic_from_lower(&self.quad, self.like())
    }

    /// `X^2 + beta1 X + beta0`.
    pub fn pole_poly(&self) -> Vec<K> {
        upoly::monic_from_lower(&[self.beta0.clone(), self.beta1.clone()], self.like())
    }

    pub fn s0(&self) -> Vec<K> {
        let a = self.a_poly();
        upoly::mul(&a, &a)
    }

    pub fn s1(&self) -> Vec<K> {
        let c: Vec<K> = [-1, 3, -3, 1].iter().map(|&x| self.like().rational_like(&rint(x))).collect();
        upoly::mul(&c, &self.d_poly())
    }

    pub fn s_inf(&self) -> Vec<K> {
        upoly::scale(&self.pole_poly(), &self.gamma)
    }

    pub fn s_lambda(&self) -> Vec<K> {
        let e = self.e_poly();
        upoly::mul(&self.q_poly(), &upoly::mul(&e, &e))
    }

    /// `S0 - S1 - S_inf` and `S0 - S_lambda - lambda S_inf`, trimmed.
    pub fn residuals(&self) -> [Vec<K>; 2] {
        let s0 = self.s0();
        let sinf = self.s_inf();
        let r1 = upoly::sub(&upoly::sub(&s0, &self.s1()), &sinf);
        let r2 = upoly::sub(&upoly::sub(&s0, &self.s_lambda()), &upoly::scale(&sinf, &self.lambda));
        [upoly::trim(r1), upoly::trim(r2)]
    }

    pub fn satisfies_identities(&self) -> bool {
        self.residuals().iter().all(Vec::is_empty)
    }

    pub fn has_expected_shape(&self) -> bool {
        let h = self.n / 2;
        self.alpha.len() == h
            && self.delta.len() == self.n - 3
            && self.quad.len() == 2
            && self.eta.len() == h - 1
    }
}

/// Rescaled unknowns at `mu = 0`: `A`, `E` and `lambda` come from the
/// Chebyshev cover in `Y = X / mu`, the rest from the Padé cover.
pub fn initial_coefficients(n: usize) -> Result<CoverModel<Rational>, FamilyError> {
    check_n(n)?;
    let h = n / 2;
    let pade = pade_degenerate(n)?;
    chebyshev_degenerate(n)?;
    let two_y_minus_one = Poly::from_ints(&[-1, 2]);
    let pow2 = |k: usize| Rational::from_integer(num_bigint::BigInt::one() << k);

    let xn = Poly::monomial(Rational::one(), n);
    let target = &xn - &pade.denominator;
    let (d, rem) = target.divrem(&Poly::from_ints(&[-1, 3, -3, 1]))?;
    if !rem.is_zero() || d.degree() != Some(n - 3) {
        return Err(FamilyError::NonzeroRemainder);
    }
    let a = crate::algebra::chebyshev_t(h).compose(&two_y_minus_one).scale(&pow2(n - 1).recip());
    let e = chebyshev_u(h - 1).compose(&two_y_minus_one).scale(&pow2(n - 2).recip());
    let lambda = (pow2(2 * n - 2) * &pade.gamma * &pade.beta0).recip();
    let lower = |p: &Poly, len: usize| (0..len).map(|k| p.coeff(k)).collect::<Vec<_>>();
    let model = CoverModel {
        n,
        alpha: lower(&a, h),
        beta0: pade.beta0,
        beta1: pade.beta1,
        gamma: pade.gamma,
        delta: lower(&d, n - 3),
        quad: vec![Rational::zero(), Rational::zero()],
        eta: lower(&e, h - 1),
        lambda,
    };
    if !a.is_monic() || !e.is_monic() {
        return Err(FamilyError::RamificationCheckFailed("Chebyshev factors are not monic".into()));
    }
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn initial_values_at_six() {
        let m = initial_coefficients(6).unwrap();
        assert_eq!(m.gamma, rint(15));
        assert_eq!(m.beta1, rat(-8, 5));
        assert_eq!(m.beta0, rat(2, 3));
        assert_eq!(m.delta, vec![rint(10), rint(6), rint(3)]);
        assert_eq!(m.lambda, rat(1, 10240));
        // A(Y)^2 - (Y^2 - Y) E(Y)^2 is the constant lambda gamma beta0
        let a = m.a_poly();
        let e = m.e_poly();
        let yy = vec![rint(0), rint(-1), rint(1)];
        let lhs = upoly::trim(upoly::sub(&upoly::mul(&a, &a), &upoly::mul(&yy, &upoly::mul(&e, &e))));
        assert_eq!(lhs, vec![&m.lambda * &m.gamma * &m.beta0]);
    }
}
