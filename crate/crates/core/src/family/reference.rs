//! The published degree-6 family, for comparison with computed models.

use super::model::NormalizedModel;
use crate::algebra::{rat, rint, Poly, RatFunc, Rational};

fn p(cs: &[i64]) -> Poly {
    Poly::from_ints(cs)
}

fn rf(num: &[i64], den: &[i64]) -> RatFunc {
    RatFunc::new(p(num), p(den)).expect("nonzero denominator")
}

fn linear(root: Rational) -> Poly {
    Poly::new(vec![root, rint(1)])
}

pub fn beta0() -> RatFunc {
    rf(&[128, 192, 120, 25], &[96, 36])
}

pub fn gamma() -> RatFunc {
    let c = p(&[56, 25]).pow(3).scale(&rint(3));
    RatFunc::new(c, p(&[8, 3]).scale(&rint(256))).expect("nonzero")
}

/// `H_6(T)`.
pub fn h6() -> RatFunc {
    let num = &(&linear(rint(8)) * &linear(rat(13, 5)).pow(2)) * &linear(rat(8, 5)).pow(3);
    let den = (&linear(rat(8, 3)) * &linear(rat(56, 25)).pow(3)).scale(&rint(-15));
    RatFunc::new(num, den).expect("nonzero")
}

/// `H_6(T) - 1` in its factored form.
pub fn h6_minus_one() -> RatFunc {
    let num = &linear(rint(2)) * &linear(rat(16, 5)).pow(5);
    let den = (&linear(rat(8, 3)) * &linear(rat(56, 25)).pow(3)).scale(&rint(-15));
    RatFunc::new(num, den).expect("nonzero")
}

/// `(T+8)(T+13/5)^2(T+8/5)^3 + 15(T+8/3)(T+56/25)^3` and `(T+2)(T+16/5)^5`.
pub fn standalone_identity_sides() -> (Poly, Poly) {
    let lhs = &(&(&linear(rint(8)) * &linear(rat(13, 5)).pow(2)) * &linear(rat(8, 5)).pow(3))
        + &(&linear(rat(8, 3)) * &linear(rat(56, 25)).pow(3)).scale(&rint(15));
    let rhs = &linear(rint(2)) * &linear(rat(16, 5)).pow(5);
    (lhs, rhs)
}

/// The full normalized model for `n = 6` as a list of factors.
pub fn n6_model() -> NormalizedModel<RatFunc> {
    let c = RatFunc::constant;
    NormalizedModel {
        n: 6,
        alpha: vec![rf(&[4096, 6720, 3600, 625], &[256, 96]), rf(&[120, 75], &[16]), RatFunc::zero()],
        beta0: beta0(),
        beta1: RatFunc::variable(),
        gamma: gamma(),
        delta: vec![rf(&[11136, 12960, 4950, 625], &[128, 48]), rf(&[168, 75], &[8]), c(rint(3))],
        quad: vec![rf(&[2176, 2720, 1050, 125], &[128, 48]), rf(&[-8, -5], &[2])],
        eta: vec![rf(&[320, 424, 180, 25], &[64, 24]), rf(&[8, 5], &[4])],
        lambda: h6(),
    }
}

/// Value of `beta1` at the degenerate point.
pub fn t0() -> Rational {
    rat(-8, 5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn published_model_is_consistent() {
        let m = n6_model();
        assert!(m.satisfies_identities());
        assert_eq!(h6().sub(&RatFunc::one()), h6_minus_one());
        let (l, r) = standalone_identity_sides();
        assert_eq!(l, r);
        assert!(h6().eval(&t0()).unwrap().is_zero());
        let deltas: Vec<Rational> = m.delta.iter().map(|d| d.eval(&t0()).unwrap()).collect();
        assert_eq!(deltas, vec![rint(10), rint(6), rint(3)]);
    }
}
