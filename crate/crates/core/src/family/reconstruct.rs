//! Algebraization: every normalized coefficient becomes a rational function of
//! a generator `T`, found by Padé approximation in `s = T - T(0)`.

use num_traits::Zero;
use serde::Serialize;

use super::lift::{newton_lift, DeformationState, NewtonStep};
use super::model::{CoverModel, NormalizedModel};
use super::normalize::{normalize, NormalizationReport};
use super::FamilyError;
use crate::algebra::linalg::nullspace;
use crate::algebra::{Poly, RatFunc, Rational, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReconstructOptions {
    /// Extra series terms beyond `2d + 2` that must agree with a degree-`d` fit.
    pub margin: usize,
}

impl Default for ReconstructOptions {
    fn default() -> Self {
        ReconstructOptions { margin: 8 }
    }
}

/// The generator: `s = C - C(0)` for a chosen coefficient `C`.
struct Generator {
    name: String,
    t0: Rational,
    valuation: usize,
    /// `s^k` for `k < terms`.
    powers: Vec<Series>,
}

const GENERATOR_CANDIDATES: [&str; 4] = ["beta1", "beta0", "gamma", "delta_top"];

fn candidate<'a>(model: &'a NormalizedModel<Series>, name: &str) -> &'a Series {
    match name {
        "beta1" => &model.beta1,
        "beta0" => &model.beta0,
        "gamma" => &model.gamma,
        _ => model.delta.last().expect("delta is nonempty"),
    }
}

impl Generator {
    fn new(name: &str, c: &Series) -> Result<Self, FamilyError> {
        let t0 = c.constant_term();
        let s = c.sub(&Series::constant(t0.clone(), c.precision()));
        let valuation = s.valuation().ok_or_else(|| FamilyError::GeneratorDegenerate(name.into()))?;
        let terms = (c.precision() - 1) / valuation + 1;
        let mut powers = vec![Series::one(c.precision())];
        for k in 1..terms {
            powers.push(powers[k - 1].mul(&s));
        }
        Ok(Generator { name: name.into(), t0, valuation, powers })
    }

    fn terms(&self) -> usize {
        self.powers.len()
    }

    /// Coefficients of `c` as a power series in `s`.
    fn expand(&self, name: &str, c: &Series) -> Result<Vec<Rational>, FamilyError> {
        let mut r = c.clone();
        let mut out = Vec::with_capacity(self.terms());
        for (k, pk) in self.powers.iter().enumerate() {
            let idx = self.valuation * k;
            let f = r.coeff(idx) / pk.coeff(idx);
            if !f.is_zero() {
                r = r.sub(&pk.scale(&f));
            }
            out.push(f);
        }
        if !r.is_zero() {
            return Err(FamilyError::NotAFunctionOfGenerator { coefficient: name.into(), precision: c.precision() });
        }
        Ok(out)
    }

    /// `P(s) / Q(s)` of least degree matching all known terms, in `T = t0 + s`.
    fn pade(&self, name: &str, f: &[Rational], margin: usize) -> Result<RatFunc, FamilyError> {
        let k = f.len();
        let max_degree = k.saturating_sub(margin + 2) / 2;
        let at = |i: isize| if i >= 0 { f[i as usize].clone() } else { Rational::zero() };
        for d in 0..=max_degree {
            let rows: Vec<Vec<Rational>> = (d + 1..=2 * d)
                .map(|t| (0..=d).map(|j| at(t as isize - j as isize)).collect())
                .collect();
            let q = if rows.is_empty() {
                let mut v = vec![Rational::zero(); d + 1];
                v[0] = Rational::from_integer(1.into());
                v
            } else {
                match nullspace(&rows)?.into_iter().next() {
                    Some(v) => v,
                    None => continue,
                }
            };
            let conv = |t: usize| -> Rational {
                (0..=d.min(t)).fold(Rational::zero(), |acc, j| acc + &q[j] * &f[t - j])
            };
            if (d + 1..k).any(|t| !conv(t).is_zero()) {
                continue;
            }
            let p = Poly::new((0..=d).map(conv).collect());
            let shift = Poly::new(vec![-self.t0.clone(), Rational::from_integer(1.into())]);
            let q = Poly::new(q);
            if q.is_zero() {
                continue;
            }
            return Ok(RatFunc::new(p.compose(&shift), q.compose(&shift))?);
        }
        Err(FamilyError::InsufficientPrecision {
            coefficient: name.into(),
            precision: self.powers[0].precision(),
            max_degree,
        })
    }
}

/// Rational functions for every coefficient, the generator name and its value at `mu = 0`.
pub fn reconstruct(
    model: &NormalizedModel<Series>,
    opts: ReconstructOptions,
) -> Result<(NormalizedModel<RatFunc>, String, Rational), FamilyError> {
    let mut last_err = None;
    for name in GENERATOR_CANDIDATES {
        let gen = match Generator::new(name, candidate(model, name)) {
            Ok(g) => g,
            Err(e) => {
                last_err = Some(e);
                continue;
            }
        };
        let rec = |label: String, c: &Series| -> Result<RatFunc, FamilyError> {
            let f = gen.expand(&label, c)?;
            gen.pade(&label, &f, opts.margin)
        };
        let list = |prefix: &str, v: &[Series]| -> Result<Vec<RatFunc>, FamilyError> {
            v.iter().enumerate().map(|(i, c)| rec(format!("{prefix}{i}"), c)).collect()
        };
        let out = CoverModel {
            n: model.n,
            alpha: list("alpha", &model.alpha)?,
            beta0: rec("beta0".into(), &model.beta0)?,
            beta1: rec("beta1".into(), &model.beta1)?,
            gamma: rec("gamma".into(), &model.gamma)?,
            delta: list("delta", &model.delta)?,
            quad: list("q", &model.quad)?,
            eta: list("eta", &model.eta)?,
            lambda: rec("lambda".into(), &model.lambda)?,
        };
        if !out.satisfies_identities() {
            return Err(FamilyError::IdentityFailed("reconstructed model fails the identities".into()));
        }
        return Ok((out, gen.name, gen.t0));
    }
    Err(last_err.unwrap_or_else(|| FamilyError::GeneratorDegenerate("none".into())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgebraizeOptions {
    pub precision: usize,
    pub max_precision: usize,
    pub reconstruct: ReconstructOptions,
}

impl AlgebraizeOptions {
    /// Starting precision large enough for a fit of `lambda`, whose degree is `3(n/2 - 1)`.
    pub fn for_degree(n: usize) -> Self {
        let base = Self::default();
        let d = 3 * (n / 2 - 1);
        let needed = 2 * (2 * d + 2 + base.reconstruct.margin);
        AlgebraizeOptions { precision: needed.next_power_of_two(), ..base }
    }
}

impl Default for AlgebraizeOptions {
    fn default() -> Self {
        AlgebraizeOptions { precision: 64, max_precision: 1024, reconstruct: ReconstructOptions::default() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Algebraized {
    pub n: usize,
    pub model: NormalizedModel<RatFunc>,
    pub generator: String,
    #[serde(with = "crate::json::rational")]
    pub t0: Rational,
    /// Precisions tried, the last one successful.
    pub attempts: Vec<usize>,
    pub ledger: Vec<NewtonStep>,
    /// `mu`-adic valuation of `lambda` in the lifted model.
    pub lambda_valuation: Option<usize>,
    pub normalization: NormalizationReport,
}

/// Lift, normalize and reconstruct, doubling the precision when the fit runs out of terms.
pub fn algebraize(n: usize, opts: AlgebraizeOptions) -> Result<Algebraized, FamilyError> {
    let mut precision = opts.precision;
    let mut attempts = Vec::new();
    loop {
        attempts.push(precision);
        let state: DeformationState = newton_lift(n, precision)?;
        let (normalized, normalization) = normalize(&state)?;
        match reconstruct(&normalized, opts.reconstruct) {
            Ok((model, generator, t0)) => {
                return Ok(Algebraized {
                    n,
                    model,
                    generator,
                    t0,
                    attempts,
                    ledger: state.ledger,
                    lambda_valuation: normalized.lambda.valuation(),
                    normalization,
                })
            }
            Err(FamilyError::InsufficientPrecision { .. }) if 2 * precision <= opts.max_precision => {
                precision *= 2;
            }
            Err(e) => return Err(e),
        }
    }
}
