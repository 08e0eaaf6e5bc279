//! Exact certification of a reconstructed model.

use num_traits::Zero;
use serde::Serialize;

use super::model::NormalizedModel;
use super::FamilyError;
use crate::algebra::{rint, Coeff, Poly, RatFunc, Rational};
use crate::monodromy::expected_ramification;

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub identities_exact: bool,
    /// Parameter value at which the squarefree and coprimality conditions were certified.
    #[serde(with = "crate::json::rational")]
    pub side_condition_point: Rational,
    /// Degree of `T -> lambda(T)`.
    pub lambda_degree: usize,
    /// Multiplicities of `lambda` over `0, 1, infinity`; these carry the
    /// types of `z1, z2, z3` in that order.
    pub ramification: [Vec<usize>; 3],
}

/// Multiplicities of the fiber of `f` over zero, counting the point `T = infinity`.
pub fn fiber_pattern(num: &Poly, degree: usize) -> Vec<usize> {
    let mut pat = num.multiplicity_pattern();
    let d = num.degree().unwrap_or(0);
    if d < degree {
        pat.push(degree - d);
    }
    pat.sort_unstable_by(|a, b| b.cmp(a));
    pat
}

/// Fiber multiplicities of `lambda` over `0`, `1` and `infinity`.
pub fn lambda_ramification(lambda: &RatFunc) -> [Vec<usize>; 3] {
    let d = lambda.degree();
    let num = lambda.numerator();
    let den = lambda.denominator();
    [fiber_pattern(num, d), fiber_pattern(&(num - den), d), fiber_pattern(den, d)]
}

fn specialize(model: &NormalizedModel<RatFunc>, t: &Rational) -> Option<NormalizedModel<Rational>> {
    model.try_map(|c| c.eval(t)).ok()
}

fn coprime(a: &Poly, b: &Poly) -> bool {
    a.gcd(b).degree() == Some(0)
}

/// Squarefree factors, pairwise coprime fibers, and `lambda` not in `{0, 1}`.
fn side_conditions_hold(m: &NormalizedModel<Rational>) -> bool {
    let p = |v: Vec<Rational>| Poly::new(v);
    let (a, d, e, q, pole) = (p(m.a_poly()), p(m.d_poly()), p(m.e_poly()), p(m.q_poly()), p(m.pole_poly()));
    let x1 = Poly::from_ints(&[-1, 1]);
    let qe = &q * &e;
    let fibers = [a.clone(), &x1 * &d, qe.clone(), pole.clone()];
    let squarefree = [&a, &d, &qe, &pole].iter().all(|f| f.is_squarefree());
    let separated = !d.eval(&rint(1)).is_zero();
    let pairwise = (0..4).all(|i| (i + 1..4).all(|j| coprime(&fibers[i], &fibers[j])));
    let lam_ok = !m.lambda.is_zero() && m.lambda != rint(1) && !m.gamma.is_zero();
    squarefree && separated && pairwise && lam_ok
}

const SIDE_POINTS: [(i64, i64); 8] = [(1, 1), (2, 1), (1, 3), (-1, 1), (5, 7), (3, 1), (-7, 2), (11, 5)];

pub fn verify_model(model: &NormalizedModel<RatFunc>) -> Result<VerificationReport, FamilyError> {
    let n = model.n;
    if !model.has_expected_shape() {
        return Err(FamilyError::IdentityFailed("coefficient lists have the wrong lengths".into()));
    }
    let [r1, r2] = model.residuals();
    if !r1.iter().all(Coeff::vanishes) {
        return Err(FamilyError::IdentityFailed("S0 - S_inf != S1".into()));
    }
    if !r2.iter().all(Coeff::vanishes) {
        return Err(FamilyError::IdentityFailed("S0 - lambda S_inf != S_lambda".into()));
    }
    let point = SIDE_POINTS
        .iter()
        .map(|&(a, b)| Rational::new(a.into(), b.into()))
        .find(|t| specialize(model, t).is_some_and(|m| side_conditions_hold(&m)))
        .ok_or_else(|| FamilyError::IdentityFailed("side conditions fail at every test point".into()))?;

    let ramification = lambda_ramification(&model.lambda);
    let names = ["lambda = 0", "lambda = 1", "lambda = infinity"];
    for ((found, expected), point) in ramification.iter().zip(expected_ramification(n)).zip(names) {
        if *found != expected {
            return Err(FamilyError::RamificationMismatch { point: point.into(), expected, found: found.clone() });
        }
    }
    Ok(VerificationReport {
        n,
        identities_exact: true,
        side_condition_point: point,
        lambda_degree: model.lambda.degree(),
        ramification,
    })
}
