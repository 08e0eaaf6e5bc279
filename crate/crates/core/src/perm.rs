//! Permutations of `{1..N}` with explicit degree.
//!
//! Products follow function composition: `p.compose(&q)` applies `q` first,
//! then `p`. With this convention `(1,2)(3,4) * (2,4) = (1,2,3,4)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {degree} exceeds the supported bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("not a bijection of 1..{0}")]
    NotBijection(usize),
    #[error("point {point} outside 1..{degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("cannot parse cycle notation: {0}")]
    Parse(String),
    #[error("empty generator list")]
    NoGenerators,
}

/// A bijection of `{1..N}`, stored zero-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= u8::MAX as usize);
        Permutation { images: (0..degree as u8).collect() }
    }

    /// From zero-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(PermError::DegreeTooLarge { degree: n, bound: u8::MAX as usize });
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(PermError::NotBijection(n));
            }
            seen[v] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|v| v as u8).collect() })
    }

    /// From one-based images, as used in the JSON form.
    pub fn from_one_based(images: &[usize]) -> Result<Self, PermError> {
        if images.contains(&0) {
            return Err(PermError::NotBijection(images.len()));
        }
        Self::from_images(images.iter().map(|v| v - 1).collect())
    }

    /// Builds a permutation from one-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for &pt in cycle.iter() {
                if pt == 0 || pt > degree {
                    return Err(PermError::PointOutOfRange { point: pt, degree });
                }
                if touched[pt - 1] {
                    return Err(PermError::NotBijection(degree));
                }
                touched[pt - 1] = true;
            }
            for k in 0..cycle.len() {
                images[cycle[k] - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Self::from_images(images)
    }

    /// Transposition of two one-based points.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        Self::from_cycles(degree, &[&[a, b]]).expect("valid transposition")
    }

    /// The cycle `(first, first+1, ..., last)` in degree `degree`.
    pub fn consecutive_cycle(degree: usize, first: usize, last: usize) -> Self {
        let pts: Vec<usize> = (first..=last).collect();
        Self::from_cycles(degree, &[&pts]).expect("valid cycle")
    }

    /// Parses `"(1,2,3)(4,5)"`; `"()"` is the identity.
    pub fn parse(degree: usize, text: &str) -> Result<Self, PermError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')').map(|end| (&r[..end], &r[end + 1..])))
                .ok_or_else(|| PermError::Parse(text.to_string()))?;
            if !body.0.is_empty() {
                let pts = body
                    .0
                    .split(',')
                    .map(|t| t.parse::<usize>().map_err(|_| PermError::Parse(text.to_string())))
                    .collect::<Result<Vec<_>, _>>()?;
                cycles.push(pts);
            }
            rest = body.1;
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Zero-based image of a zero-based point.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize).collect()
    }

    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    fn check_degree(&self, other: &Self) -> Result<(), PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(())
    }

    /// `self ∘ q`: apply `q` first.
    pub fn compose(&self, q: &Self) -> Result<Self, PermError> {
        self.check_degree(q)?;
        Ok(self.compose_unchecked(q))
    }

    pub(crate) fn compose_unchecked(&self, q: &Self) -> Self {
        Permutation { images: q.images.iter().map(|&i| self.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// `g p g^{-1}`.
    pub fn conjugate(&self, g: &Self) -> Result<Self, PermError> {
        self.check_degree(g)?;
        Ok(self.conjugate_unchecked(g))
    }

    pub(crate) fn conjugate_unchecked(&self, g: &Self) -> Self {
        // (g p g^-1)(g(x)) = g(p(x))
        let mut images = vec![0u8; self.degree()];
        for x in 0..self.degree() {
            images[g.images[x] as usize] = g.images[self.images[x] as usize];
        }
        Permutation { images }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.degree());
        for _ in 0..k.unsigned_abs() {
            acc = base.compose_unchecked(&acc);
        }
        acc
    }

    /// Cycles including fixed points, each starting at its smallest point (zero-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    /// Multiset of cycle lengths (fixed points included), sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// `+1` for even, `-1` for odd.
    pub fn parity(&self) -> i8 {
        if (self.degree() - self.cycles().len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == 1
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().into_iter().fold(1u64, |acc, l| num_integer::lcm(acc, l as u64))
    }

    /// Zero-based support points.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&x| self.apply(x) != x).collect()
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        (0..self.degree()).find(|&x| self.apply(x) != x)
    }
}

/// Product of a sequence of permutations `p_1 p_2 ... p_k` (so `p_k` acts first).
pub fn product<'a, I>(perms: I) -> Result<Permutation, PermError>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    let mut it = perms.into_iter();
    let first = it.next().ok_or(PermError::NoGenerators)?.clone();
    it.try_fold(first, |acc, p| acc.compose(p))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cyc in self.cycles() {
            if cyc.len() < 2 {
                continue;
            }
            wrote = true;
            write!(f, "(")?;
            for (k, x) in cyc.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[deg {}]", self, self.degree())
    }
}

/// Degree-tagged parsing, `"6:(1,2,3)"`.
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (deg, body) = s.split_once(':').ok_or_else(|| PermError::Parse(s.to_string()))?;
        let deg = deg.trim().parse::<usize>().map_err(|_| PermError::Parse(s.to_string()))?;
        Self::parse(deg, body)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.one_based_images().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_based(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(deg: usize, s: &str) -> Permutation {
        Permutation::parse(deg, s).unwrap()
    }

    #[test]
    fn involution_squared_is_identity() {
        let t = p(4, "(1,2)");
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let got = p(4, "(1,2)(3,4)").compose(&p(4, "(2,4)")).unwrap();
        assert_eq!(got, p(4, "(1,2,3,4)"));
        let q = p(5, "(1,3,5)(2,4)");
        assert_eq!(Permutation::identity(5).compose(&q).unwrap(), q);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let err = p(4, "(1,2)").compose(&p(5, "(1,2)")).unwrap_err();
        assert_eq!(err, PermError::DegreeMismatch(4, 5));
    }

    #[test]
    fn cycle_types() {
        assert_eq!(p(6, "(1,2,3,4,5,6)").cycle_type(), vec![6]);
        assert_eq!(p(6, "(1,3)(4,6)").cycle_type(), vec![2, 2, 1, 1]);
        assert_eq!(p(8, "(1,2,3,4,5,6)").cycle_type(), vec![6, 1, 1]);
    }

    #[test]
    fn conjugation_examples() {
        let c = p(3, "(1,2,3)");
        assert_eq!(c.conjugate(&Permutation::identity(3)).unwrap(), c);
        assert_eq!(c.conjugate(&p(3, "(1,2)")).unwrap(), p(3, "(2,1,3)"));
        // reflection i -> n-1-i on 1..n-2 inverts the (n-2)-cycle
        let n = 8;
        let sigma1 = Permutation::consecutive_cycle(n, 1, n - 2);
        let refl: Vec<&[usize]> = vec![&[1, 6], &[2, 5], &[3, 4]];
        let r = Permutation::from_cycles(n, &refl).unwrap();
        assert_eq!(sigma1.conjugate(&r).unwrap(), sigma1.inverse());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let q = p(7, "(1,5,2)(3,7)");
        assert_eq!(q.to_string(), "(1,5,2)(3,7)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!("7:(1,5,2)(3,7)".parse::<Permutation>().unwrap(), q);
        assert!(Permutation::parse(3, "(1,4)").is_err());
        assert!(Permutation::parse(3, "(1,2)(2,3)").is_err());
    }

    #[test]
    fn json_is_one_based_images() {
        let q = p(4, "(1,2,3)");
        assert_eq!(serde_json::to_string(&q).unwrap(), "[2,3,1,4]");
        let back: Permutation = serde_json::from_str("[2,3,1,4]").unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn parity_and_order() {
        assert_eq!(p(6, "(1,2,3,4)").parity(), -1);
        assert_eq!(p(6, "(1,2,3)").parity(), 1);
        assert_eq!(p(6, "(1,2,3)(4,5)").order(), 6);
        assert_eq!(p(5, "(1,2,3,4,5)").pow(-1), p(5, "(1,2,3,4,5)").inverse());
    }
}
