//! Moving the model to the slice `alpha_{h-1} = 0` by an affine change of `X`
//! fixing `X = 1`.

use num_traits::{One, Zero};
use serde::Serialize;

use super::lift::DeformationState;
use super::model::{CoverModel, NormalizedModel};
use super::FamilyError;
use crate::algebra::{rint, upoly, Rational, Series};

/// Diagnostics on the normalized series.
#[derive(Debug, Clone, Serialize)]
pub struct NormalizationReport {
    /// Largest `k <= 4` with every coefficient a series in `mu^k`; informative only.
    pub exponent_stride: usize,
    /// Terms compared in the deck-invariance check.
    pub deck_terms: usize,
    /// Coefficients unchanged under `mu -> -mu / (1 - mu)`.
    pub deck_invariant: Vec<String>,
    /// Coefficients that change.
    pub deck_variant: Vec<String>,
}

/// Lower coefficients of `p(u X + v) / u^deg`, `p` monic of degree `deg`.
fn affine_monic(p: &[Series], u: &Series, v: &Series, u_inv: &Series) -> Vec<Series> {
    let deg = p.len() - 1;
    let composed = upoly::compose_affine(p, u, v);
    let scale = u_inv.pow(deg as u32);
    composed[..deg].iter().map(|c| c.mul(&scale)).collect()
}

pub fn normalize(state: &DeformationState) -> Result<(NormalizedModel<Series>, NormalizationReport), FamilyError> {
    let m = state.unscaled_model();
    let (n, p) = (state.n, state.precision);
    let h = n / 2;
    let u = Series::one(p).add(&m.alpha[h - 1].scale(&rint(h as i64).recip()));
    if u.constant_term().is_zero() {
        return Err(FamilyError::NonUnitLeading);
    }
    let u_inv = u.invert()?;
    let v = Series::one(p).sub(&u);
    let mu = Series::variable(p);

    let alpha = affine_monic(&m.a_poly(), &u, &v, &u_inv);
    let delta = affine_monic(&m.d_poly(), &u, &v, &u_inv);
    let eta = affine_monic(&m.e_poly(), &u, &v, &u_inv);
    let pole = affine_monic(&m.pole_poly(), &u, &v, &u_inv);
    // X_old (X_old - mu) with X_old = u X + v, made monic
    let quad = vec![v.mul(&v.sub(&mu)).mul(&u_inv).mul(&u_inv), v.scale(&rint(2)).sub(&mu).mul(&u_inv)];
    let gamma = m.gamma.mul(&u_inv.pow(n as u32 - 2));

    let model = CoverModel {
        n,
        alpha,
        beta0: pole[0].clone(),
        beta1: pole[1].clone(),
        gamma,
        delta,
        quad,
        eta,
        lambda: m.lambda.clone(),
    };
    if !model.alpha[h - 1].is_zero() {
        return Err(FamilyError::IdentityFailed("normalization left alpha_{h-1} nonzero".into()));
    }
    let report = report(&model, p);
    Ok((model, report))
}

fn report(model: &NormalizedModel<Series>, p: usize) -> NormalizationReport {
    let named = model.named();
    let exponent_stride = named.iter().map(|(_, s)| s.exponent_stride(4)).min().unwrap_or(1);
    let deck_terms = p.min(32);
    let deck = {
        let mut c = vec![-Rational::one(); deck_terms];
        c[0] = Rational::zero();
        Series::from_coeffs(c, deck_terms)
    };
    let mut deck_invariant = Vec::new();
    let mut deck_variant = Vec::new();
    for (name, s) in named {
        let t = s.truncate(deck_terms);
        match t.compose(&deck) {
            Ok(c) if c == t => deck_invariant.push(name),
            _ => deck_variant.push(name),
        }
    }
    NormalizationReport { exponent_stride, deck_terms, deck_invariant, deck_variant }
}
