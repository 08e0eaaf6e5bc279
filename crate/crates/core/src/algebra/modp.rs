//! Factorization degree patterns over prime fields.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{AlgebraError, Poly};

type Fp = Vec<u64>;

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn reduce(c: &BigInt, p: u64) -> u64 {
    let r = c % BigInt::from(p);
    let r = if r < BigInt::from(0) { r + BigInt::from(p) } else { r };
    r.to_u64().expect("reduced residue fits")
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Fp {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(out)
}

fn poly_divrem(a: &[u64], b: &[u64], p: u64) -> (Fp, Fp) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial mod p");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = mul_mod(*r.last().expect("nonempty"), inv, p);
        q[k] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - mul_mod(c, bj, p)) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Fp {
    poly_divrem(a, b, p).1
}

fn monic(a: Fp, p: u64) -> Fp {
    match a.last() {
        None => a,
        Some(&l) => {
            let inv = inv_mod(l, p);
            a.iter().map(|&c| mul_mod(c, inv, p)).collect()
        }
    }
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Fp {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(x, p)
}

fn derivative(a: &[u64], p: u64) -> Fp {
    trim(a.iter().enumerate().skip(1).map(|(k, &c)| mul_mod(c, k as u64 % p, p)).collect())
}

/// `base^e mod m`.
fn poly_pow_mod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Fp {
    let mut result: Fp = vec![1];
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_rem(&poly_mul(&result, &b, p), m, p);
        }
        b = poly_rem(&poly_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    result
}

/// Simple primality test for the small primes used in reduction.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes in increasing order starting at `from`.
pub fn primes_from(from: u64) -> impl Iterator<Item = u64> {
    (from.max(2)..).filter(|&n| is_prime(n))
}

/// Degrees of the irreducible factors of `f mod prime`, in descending order.
///
/// `f` is first scaled to a primitive integer polynomial. A prime dividing
/// the leading coefficient or making the reduction inseparable is rejected.
pub fn modp_factor_degrees(f: &Poly, prime: u64) -> Result<Vec<usize>, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if !is_prime(prime) {
        return Err(AlgebraError::BadReductionPrime(prime));
    }
    let ints = f.primitive_integer();
    let fp: Fp = ints.iter().map(|c| reduce(c, prime)).collect();
    let fp = trim(fp);
    if fp.len() != ints.len() {
        return Err(AlgebraError::BadReductionPrime(prime));
    }
    let deg = fp.len() - 1;
    if deg == 0 {
        return Ok(Vec::new());
    }
    let g = poly_gcd(&fp, &derivative(&fp, prime), prime);
    if g.len() > 1 {
        return Err(AlgebraError::BadReductionPrime(prime));
    }
    let mut rest = monic(fp, prime);
    let x: Fp = vec![0, 1];
    let mut h = x.clone();
    let mut degrees = Vec::new();
    let mut d = 1;
    while rest.len() > 1 {
        if 2 * d > rest.len() - 1 {
            degrees.push(rest.len() - 1);
            break;
        }
        h = poly_pow_mod(&h, prime, &rest, prime);
        let g = poly_gcd(&poly_sub(&h, &x, prime), &rest, prime);
        let gd = g.len() - 1;
        if gd > 0 {
            degrees.extend(std::iter::repeat_n(d, gd / d));
            rest = monic(poly_divrem(&rest, &g, prime).0, prime);
            h = poly_rem(&h, &rest, prime);
        }
        d += 1;
    }
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    Ok(degrees)
}
