//! The deformation system in rescaled unknowns, its Jacobian, and symbolic
//! versions of both as multivariate polynomials.
//!
//! Unknown order: `delta_0..delta_{n-4}, beta0, beta1, gamma,
//! alpha'_0..alpha'_{h-1}, eta'_0..eta'_{h-2}, lambda'`.

use crate::algebra::mpoly::MPoly;
use crate::algebra::{rint, upoly, Coeff, Series};

/// A coefficient ring containing the deformation parameter `mu`.
pub trait MuRing: Coeff {
    fn mul_mu_pow(&self, k: usize) -> Self;
}

impl MuRing for Series {
    fn mul_mu_pow(&self, k: usize) -> Self {
        self.shift(k)
    }
}

/// `mu` is the last variable.
impl MuRing for MPoly {
    fn mul_mu_pow(&self, k: usize) -> Self {
        self.mul(&MPoly::var(self.nvars(), self.nvars() - 1).pow(k as u32))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Layout {
    pub n: usize,
    pub h: usize,
}

impl Layout {
    pub fn new(n: usize) -> Self {
        Layout { n, h: n / 2 }
    }

    pub fn len(&self) -> usize {
        2 * self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn delta(&self, k: usize) -> usize {
        k
    }

    pub fn beta0(&self) -> usize {
        self.n - 3
    }

    pub fn beta1(&self) -> usize {
        self.n - 2
    }

    pub fn gamma(&self) -> usize {
        self.n - 1
    }

    pub fn alpha(&self, i: usize) -> usize {
        self.n + i
    }

    pub fn eta(&self, l: usize) -> usize {
        self.n + self.h + l
    }

    pub fn lambda(&self) -> usize {
        2 * self.n - 1
    }

    pub fn names(&self) -> Vec<String> {
        let mut v: Vec<String> = (0..self.n - 3).map(|k| format!("delta{k}")).collect();
        v.extend(["beta0".into(), "beta1".into(), "gamma".into()]);
        v.extend((0..self.h).map(|i| format!("alpha{i}")));
        v.extend((0..self.h - 1).map(|l| format!("eta{l}")));
        v.push("lambda".into());
        v
    }
}

fn cube<K: Coeff>(like: &K) -> Vec<K> {
    [-1, 3, -3, 1].iter().map(|&c| like.rational_like(&rint(c))).collect()
}

fn padded<K: Coeff>(mut p: Vec<K>, len: usize, like: &K) -> Vec<K> {
    p.resize(len, like.zero_like());
    p.truncate(len);
    p
}

/// Coefficients `0..n` of `F1(X)` followed by those of `F2(Y)`.
pub fn scaled_residuals<K: MuRing>(n: usize, u: &[K]) -> Vec<K> {
    let lay = Layout::new(n);
    let h = lay.h;
    let like = &u[0];
    let one = like.one_like();
    let delta = &u[..n - 3];
    let (beta0, beta1, gamma) = (&u[lay.beta0()], &u[lay.beta1()], &u[lay.gamma()]);
    let alpha = &u[lay.alpha(0)..lay.alpha(h)];
    let eta = &u[lay.eta(0)..lay.eta(h - 1)];
    let lam = &u[lay.lambda()];

    let mut ax: Vec<K> = (0..h).map(|i| alpha[i].mul_mu_pow(h - i)).collect();
    ax.push(one.clone());
    let s0 = upoly::mul(&ax, &ax);
    let s1 = upoly::mul(&cube(like), &upoly::monic_from_lower(delta, like));
    let sinf = upoly::scale(&[beta0.clone(), beta1.clone(), one.clone()], gamma);
    let f1 = upoly::sub(&upoly::sub(&s0, &s1), &sinf);

    let a = upoly::monic_from_lower(alpha, like);
    let e = upoly::monic_from_lower(eta, like);
    let yy = vec![like.zero_like(), one.negated(), one.clone()];
    let se = upoly::mul(&yy, &upoly::mul(&e, &e));
    let q = [beta0.clone(), beta1.mul_mu_pow(1), one.mul_mu_pow(2)];
    let f2 = upoly::sub(&upoly::sub(&upoly::mul(&a, &a), &se), &upoly::scale(&q, &lam.times(gamma)));

    let mut out = padded(f1, n, like);
    out.extend(padded(f2, n, like));
    out
}

/// `d F / d u` as a dense `2n x 2n` matrix, rows in residual order.
pub fn jacobian<K: MuRing>(n: usize, u: &[K]) -> Vec<Vec<K>> {
    let lay = Layout::new(n);
    let h = lay.h;
    let like = &u[0];
    let zero = like.zero_like();
    let one = like.one_like();
    let mut j = vec![vec![zero.clone(); 2 * n]; 2 * n];
    let (beta0, beta1, gamma, lam) = (&u[lay.beta0()], &u[lay.beta1()], &u[lay.gamma()], &u[lay.lambda()]);
    let r2 = |k: usize| n + k;

    for k in 0..n - 3 {
        for (t, c) in cube(like).iter().enumerate() {
            j[k + t][lay.delta(k)] = c.negated();
        }
    }
    let lg = lam.times(gamma);
    j[0][lay.beta0()] = gamma.negated();
    j[r2(0)][lay.beta0()] = lg.negated();
    j[1][lay.beta1()] = gamma.negated();
    j[r2(1)][lay.beta1()] = lg.mul_mu_pow(1).negated();
    let q = [beta0.clone(), beta1.mul_mu_pow(1), one.mul_mu_pow(2)];
    let qx = [beta0.clone(), beta1.clone(), one.clone()];
    for t in 0..3 {
        j[t][lay.gamma()] = qx[t].negated();
        j[r2(t)][lay.gamma()] = lam.times(&q[t]).negated();
        j[r2(t)][lay.lambda()] = gamma.times(&q[t]).negated();
    }

    let alpha = &u[lay.alpha(0)..lay.alpha(h)];
    let eta = &u[lay.eta(0)..lay.eta(h - 1)];
    let mut ax: Vec<K> = (0..h).map(|i| alpha[i].mul_mu_pow(h - i)).collect();
    ax.push(one.clone());
    let a = upoly::monic_from_lower(alpha, like);
    let e = upoly::monic_from_lower(eta, like);
    let two = rint(2);
    for i in 0..h {
        for (t, c) in ax.iter().enumerate() {
            if i + t < n {
                j[i + t][lay.alpha(i)] = c.mul_mu_pow(h - i).scaled(&two);
            }
        }
        for (t, c) in a.iter().enumerate() {
            if i + t < n {
                j[r2(i + t)][lay.alpha(i)] = c.scaled(&two);
            }
        }
    }
    let yy = vec![zero.clone(), one.negated(), one.clone()];
    let ye = upoly::mul(&yy, &e);
    for l in 0..h - 1 {
        for (t, c) in ye.iter().enumerate() {
            if l + t < n {
                j[r2(l + t)][lay.eta(l)] = c.scaled(&rint(-2));
            }
        }
    }
    j
}

/// Symbolic scaled system in `2n` unknowns plus `mu` (last variable).
pub fn build_scaled_system(n: usize) -> Vec<MPoly> {
    let nv = 2 * n + 1;
    let vars: Vec<MPoly> = (0..2 * n).map(|i| MPoly::var(nv, i)).collect();
    scaled_residuals(n, &vars)
}

/// Names for the unscaled system: rescaled names, `epsilon0` inserted before the eta block.
pub fn unscaled_names(n: usize) -> Vec<String> {
    let lay = Layout::new(n);
    let mut names = lay.names();
    names.insert(lay.eta(0), "epsilon0".into());
    names
}

/// The identities `S0 - S1 - S_inf` and `S0 - S_lambda - lambda S_inf` in `X`,
/// coefficients `0..n` each, over the `2n + 1` original unknowns.
pub fn build_system(n: usize) -> Vec<MPoly> {
    let lay = Layout::new(n);
    let h = lay.h;
    let nv = 2 * n + 1;
    let v = |i: usize| MPoly::var(nv, i);
    let like = MPoly::zero(nv);
    let one = MPoly::one(nv);
    let delta: Vec<MPoly> = (0..n - 3).map(v).collect();
    let (beta0, beta1, gamma) = (v(lay.beta0()), v(lay.beta1()), v(lay.gamma()));
    let alpha: Vec<MPoly> = (0..h).map(|i| v(lay.alpha(i))).collect();
    let eps = v(lay.eta(0));
    let eta: Vec<MPoly> = (0..h - 1).map(|l| v(lay.eta(l) + 1)).collect();
    let lam = v(lay.lambda() + 1);

    let a = upoly::monic_from_lower(&alpha, &like);
    let s0 = upoly::mul(&a, &a);
    let s1 = upoly::mul(&cube(&like), &upoly::monic_from_lower(&delta, &like));
    let sinf = upoly::scale(&[beta0, beta1, one.clone()], &gamma);
    let e = upoly::monic_from_lower(&eta, &like);
    let quad = vec![like.clone(), eps.neg(), one];
    let slam = upoly::mul(&quad, &upoly::mul(&e, &e));
    let f1 = upoly::sub(&upoly::sub(&s0, &s1), &sinf);
    let f2 = upoly::sub(&upoly::sub(&s0, &slam), &upoly::scale(&sinf, &lam));
    let mut out = padded(f1, n, &like);
    out.extend(padded(f2, n, &like));
    out
}
