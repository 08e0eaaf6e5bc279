use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::lcm_of_denominators;
use super::{AlgebraError, Rational};

/// Dense polynomial over Q, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `X - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `X^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.leading().recip();
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `self(inner(X))`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly), AlgebraError> {
        let dd = d.degree().ok_or(AlgebraError::DivisionByZeroPoly)?;
        let mut r = self.coeffs.clone();
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let lead_inv = d.leading().recip();
        let mut q = vec![Rational::zero(); self.coeffs.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dj;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Poly::new(q), Poly::new(r)))
    }

    /// Exact quotient; errors if the remainder is nonzero.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(d).ok()?;
        r.is_zero().then_some(q)
    }

    /// Scales to a primitive integer polynomial with positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let l = lcm_of_denominators(&self.coeffs);
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &l).to_integer()).collect();
        let mut out = primitive(ints);
        if out.last().is_some_and(Signed::is_negative) {
            for c in out.iter_mut() {
                *c = -&*c;
            }
        }
        out
    }

    pub fn from_integers(cs: &[BigInt]) -> Poly {
        Poly::new(cs.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    /// Content-normalized form: primitive integer coefficients, positive leading term.
    pub fn content_normalized(&self) -> Poly {
        Self::from_integers(&self.primitive_integer())
    }

    /// Monic gcd (zero only if both are zero), via the primitive remainder sequence.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = self.primitive_integer();
        let mut b = other.primitive_integer();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = primitive(pseudo_rem(&a, &b));
            a = b;
            b = r;
        }
        Poly::from_integers(&a).monic()
    }

    pub fn squarefree_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Yun's algorithm: monic `f_1, f_2, ...` with `monic(self) = prod f_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<Poly> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a = f.gcd(&df);
        let mut b = f.div_exact(&a).expect("divides");
        let mut c = df.div_exact(&a).expect("divides");
        let mut d = &c - &b.derivative();
        loop {
            let g = b.gcd(&d);
            out.push(g.clone());
            b = b.div_exact(&g).expect("divides");
            if b.degree() == Some(0) {
                break;
            }
            c = d.div_exact(&g).expect("divides");
            d = &c - &b.derivative();
        }
        while out.last().is_some_and(|p| p.degree() == Some(0)) {
            out.pop();
        }
        out
    }

    /// Root multiplicities over C as a sorted (descending) multiset.
    pub fn multiplicity_pattern(&self) -> Vec<usize> {
        let mut pat = Vec::new();
        for (i, f) in self.squarefree_decomposition().iter().enumerate() {
            for _ in 0..f.degree().unwrap_or(0) {
                pat.push(i + 1);
            }
        }
        pat.sort_unstable_by(|a, b| b.cmp(a));
        pat
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &Rational) -> usize {
        let lin = Poly::linear_root(r);
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            match p.div_exact(&lin) {
                Some(q) => {
                    p = q;
                    k += 1;
                }
                None => break,
            }
        }
        k
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&mono);
            } else if abs.is_integer() {
                s.push_str(&format!("{abs}*{mono}"));
            } else {
                s.push_str(&format!("({abs})*{mono}"));
            }
        }
        s
    }
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let mut v = v;
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder of integer polynomials, `deg a >= deg b`, `b != 0`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let lr = r.last().expect("nonempty").clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
        // keep the sequence from swelling
        r = primitive(r);
    }
    r
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("X"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        crate::json::rational_vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Poly::new(crate::json::rational_vec::deserialize(d)?))
    }
}

/// Chebyshev polynomial of the first kind, `T_n(cos t) = cos(n t)`.
pub fn chebyshev_t(n: usize) -> Poly {
    let two_u = Poly::from_ints(&[0, 2]);
    let (mut prev, mut cur) = (Poly::one(), Poly::x());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&two_u * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Chebyshev polynomial of the second kind.
pub fn chebyshev_u(n: usize) -> Poly {
    let two_u = Poly::from_ints(&[0, 2]);
    let (mut prev, mut cur) = (Poly::one(), two_u.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&two_u * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rint};

    #[test]
    fn division_by_cube() {
        // X^6 - 15X^2 + 24X - 10 = (X-1)^3 (X^3 + 3X^2 + 6X + 10)
        let p = Poly::from_ints(&[-10, 24, -15, 0, 0, 0, 1]);
        let cube = Poly::from_ints(&[-1, 1]).pow(3);
        let (q, r) = p.divrem(&cube).unwrap();
        assert_eq!(q, Poly::from_ints(&[10, 6, 3, 1]));
        assert!(r.is_zero());
        assert_eq!(p.divrem(&Poly::zero()), Err(AlgebraError::DivisionByZeroPoly));
    }

    #[test]
    fn gcd_and_eval() {
        let a = Poly::from_ints(&[-1, 0, 1]);
        let b = Poly::from_ints(&[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        assert_eq!(Poly::from_ints(&[-1, 1]).pow(3).eval(&rint(1)), rint(0));
        let c = Poly::from_ints(&[2, 3, 1]); // (X+1)(X+2)
        let d = Poly::from_ints(&[3, 4, 1]); // (X+1)(X+3)
        assert_eq!(c.gcd(&d), Poly::from_ints(&[1, 1]));
        assert_eq!(c.scale(&rat(3, 7)).gcd(&d.scale(&rint(-5))), Poly::from_ints(&[1, 1]));
    }

    #[test]
    fn chebyshev() {
        assert_eq!(chebyshev_t(2), Poly::from_ints(&[-1, 0, 2]));
        assert_eq!(chebyshev_t(6), Poly::from_ints(&[-1, 0, 18, 0, -48, 0, 32]));
        for n in 0..=20 {
            let t = chebyshev_t(n);
            assert_eq!(t.eval(&rint(1)), rint(1));
            assert_eq!(t.degree(), Some(n));
            if n >= 1 {
                assert_eq!(t.leading(), Rational::from_integer(BigInt::from(2).pow(n as u32 - 1)));
            }
        }
        assert_eq!(chebyshev_u(2), Poly::from_ints(&[-1, 0, 4]));
    }

    #[test]
    fn squarefree_pieces() {
        let p = &Poly::from_ints(&[-1, 1]).pow(3) * &Poly::from_ints(&[2, 1]);
        assert_eq!(p.squarefree_part(), Poly::from_ints(&[-2, 1, 1]));
        assert_eq!(p.multiplicity_pattern(), vec![3, 1]);
        assert_eq!(p.root_multiplicity(&rint(1)), 3);
        assert_eq!(p.root_multiplicity(&rint(-2)), 1);
        assert_eq!(p.root_multiplicity(&rint(0)), 0);
        let q = &(&Poly::from_ints(&[1, 0, 1]).pow(2) * &Poly::from_ints(&[0, 1]).pow(5))
            * &Poly::from_ints(&[3, 1]);
        assert_eq!(q.multiplicity_pattern(), vec![5, 2, 2, 1]);
    }

    #[test]
    fn display_and_json() {
        let p = Poly::new(vec![rat(1, 2), rint(0), rint(-3)]);
        assert_eq!(p.to_string_var("T"), "-3*T^2 + 1/2");
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["1/2","0","-3"]"#);
        let back: Poly = serde_json::from_str(r#"["1/2","0","-3","0"]"#).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn composition() {
        let p = Poly::from_ints(&[0, 0, 1]);
        let inner = Poly::from_ints(&[1, 1]);
        assert_eq!(p.compose(&inner), Poly::from_ints(&[1, 2, 1]));
    }
}
