//! Quadratically convergent lift of the degenerate solution to `Q[[mu]]`.

use num_traits::Zero;
use serde::Serialize;

use super::model::{initial_coefficients, CoverModel};
use super::system::{jacobian, scaled_residuals, Layout};
use super::FamilyError;
use crate::algebra::linalg::{inverse, mat_vec, nullspace};
use crate::algebra::{Rational, Series};

pub const MAX_PRECISION: usize = 4096;

/// One doubling step from order `from` to order `to`; `residual_order` is the
/// vanishing order of the residuals measured before the correction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NewtonStep {
    pub from: usize,
    pub to: usize,
    pub residual_order: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeformationState {
    pub n: usize,
    pub precision: usize,
    /// Rescaled unknowns in [`Layout`] order.
    pub unknowns: Vec<Series>,
    pub ledger: Vec<NewtonStep>,
    /// Vanishing order of the residuals at the final precision.
    pub certified_order: usize,
}

/// The rescaled starting point in [`Layout`] order.
pub fn initial_point(n: usize) -> Result<Vec<Rational>, FamilyError> {
    let m = initial_coefficients(n)?;
    let mut u = m.delta.clone();
    u.extend([m.beta0, m.beta1, m.gamma]);
    u.extend(m.alpha);
    u.extend(m.eta);
    u.push(m.lambda);
    Ok(u)
}

fn residual_order(f: &[Series]) -> usize {
    f.iter()
        .map(|s| s.valuation().unwrap_or(s.precision()))
        .min()
        .unwrap_or(0)
}

fn constant_matrix(j: &[Vec<Series>], t: usize) -> Vec<Vec<Rational>> {
    j.iter()
        .map(|row| row.iter().map(|s| if t < s.precision() { s.coeff(t).clone() } else { Rational::zero() }).collect())
        .collect()
}

pub fn newton_lift(n: usize, precision: usize) -> Result<DeformationState, FamilyError> {
    super::check_n(n)?;
    if precision == 0 || precision > MAX_PRECISION {
        return Err(FamilyError::PrecisionExhausted { requested: precision, limit: MAX_PRECISION });
    }
    let dim = Layout::new(n).len();
    let mut u: Vec<Series> = initial_point(n)?.into_iter().map(|c| Series::constant(c, 1)).collect();
    let j0 = constant_matrix(&jacobian(n, &u), 0);
    let j0_inv = match inverse(&j0)? {
        Some(m) => m,
        None => return Err(FamilyError::SingularJacobian { kernel: nullspace(&j0)? }),
    };
    let mut ledger = Vec::new();
    let mut k = 1;
    while k < precision {
        let p = (2 * k).min(precision);
        let width = p - k;
        u = u.iter().map(|s| Series::from_coeffs(s.coeffs().to_vec(), p)).collect();
        let f = scaled_residuals(n, &u);
        let order = residual_order(&f);
        if order < k {
            return Err(FamilyError::IdentityFailed(format!("residual order {order} below {k}")));
        }
        let jac = jacobian(n, &u.iter().map(|s| s.truncate(width)).collect::<Vec<_>>());
        let higher: Vec<Vec<(usize, usize, Rational)>> = (1..width)
            .map(|t| {
                let mut entries = Vec::new();
                for (r, row) in jac.iter().enumerate() {
                    for (c, s) in row.iter().enumerate() {
                        if !s.coeff(t).is_zero() {
                            entries.push((r, c, s.coeff(t).clone()));
                        }
                    }
                }
                entries
            })
            .collect();
        let mut corr: Vec<Vec<Rational>> = Vec::with_capacity(width);
        for m in 0..width {
            let mut rhs: Vec<Rational> = f.iter().map(|s| s.coeff(k + m).clone()).collect();
            for t in 1..=m {
                let prev = &corr[m - t];
                for (r, c, v) in &higher[t - 1] {
                    if !prev[*c].is_zero() {
                        rhs[*r] -= v * &prev[*c];
                    }
                }
            }
            corr.push(mat_vec(&j0_inv, &rhs));
        }
        for (c, s) in u.iter_mut().enumerate() {
            let cs = s.coeffs_mut();
            for (m, d) in corr.iter().enumerate() {
                cs[k + m] -= &d[c];
            }
        }
        ledger.push(NewtonStep { from: k, to: p, residual_order: order });
        k = p;
    }
    u = u.iter().map(|s| Series::from_coeffs(s.coeffs().to_vec(), precision)).collect();
    let certified_order = residual_order(&scaled_residuals(n, &u));
    if certified_order < precision {
        return Err(FamilyError::IdentityFailed(format!(
            "final residual order {certified_order} below precision {precision}"
        )));
    }
    debug_assert_eq!(u.len(), dim);
    Ok(DeformationState { n, precision, unknowns: u, ledger, certified_order })
}

impl DeformationState {
    pub fn layout(&self) -> Layout {
        Layout::new(self.n)
    }

    /// The model in the original unknowns: `alpha_i = mu^{h-i} alpha'_i`,
    /// `eta_l = mu^{h-1-l} eta'_l`, `lambda = mu^n lambda'`, `epsilon0 = mu`.
    pub fn unscaled_model(&self) -> CoverModel<Series> {
        let lay = self.layout();
        let (n, h, p) = (self.n, lay.h, self.precision);
        let u = &self.unknowns;
        CoverModel {
            n,
            alpha: (0..h).map(|i| u[lay.alpha(i)].shift(h - i)).collect(),
            beta0: u[lay.beta0()].clone(),
            beta1: u[lay.beta1()].clone(),
            gamma: u[lay.gamma()].clone(),
            delta: u[..n - 3].to_vec(),
            quad: vec![Series::zero(p), Series::variable(p).neg()],
            eta: (0..h - 1).map(|l| u[lay.eta(l)].shift(h - 1 - l)).collect(),
            lambda: u[lay.lambda()].shift(n),
        }
    }

    /// Orders never fall short of doubling.
    pub fn ledger_doubles(&self) -> bool {
        self.ledger.iter().all(|s| s.residual_order >= s.from)
            && self.ledger.windows(2).all(|w| w[1].residual_order >= w[0].to)
            && self.certified_order >= self.precision
    }
}
