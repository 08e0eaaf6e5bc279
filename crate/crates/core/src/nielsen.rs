//! Nielsen classes of 4-tuples in `S_n` with cycle types
//! `(n-2)`, `3`, `2^((n-2)/2)`, `2^(n/2)`, and the braid action on them.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::group::{group_order, MAX_GROUP_DEGREE};
use crate::perm::{PermError, Permutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NielsenError {
    #[error("cycle of odd length {0} has no such decomposition")]
    OddCycleLength(usize),
    #[error("point {0} is not moved by the cycle")]
    PointNotInSupport(usize),
    #[error("argument is not a single cycle")]
    NotACycle,
    #[error("label {label} out of range for n = {n}")]
    IndexOutOfRange { label: ClassLabel, n: usize },
    #[error("n = {0} must be even and at least 6")]
    BadDegree(usize),
    #[error("degree {degree} exceeds the supported bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("braid index {0} not in 1..=3")]
    BadIndex(usize),
    #[error("tuple is not in the Nielsen class: {0}")]
    InvalidTuple(String),
    #[error("unknown class label {0:?}")]
    BadLabel(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
}

/// One of the labels `a_i`, `b_i`, `c_i` of the class representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassLabel {
    pub family: Family,
    pub index: usize,
}

impl ClassLabel {
    pub fn new(family: Family, index: usize) -> Self {
        ClassLabel { family, index }
    }

    pub fn index_range(family: Family, n: usize) -> std::ops::RangeInclusive<usize> {
        let h = n / 2;
        match family {
            Family::A => 1..=h,
            Family::B => 2..=h,
            Family::C => 1..=h.saturating_sub(2),
        }
    }

    pub fn in_range(&self, n: usize) -> bool {
        Self::index_range(self.family, n).contains(&self.index)
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            Family::A => 'a',
            Family::B => 'b',
            Family::C => 'c',
        };
        write!(f, "{c}{}", self.index)
    }
}

impl FromStr for ClassLabel {
    type Err = NielsenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || NielsenError::BadLabel(s.to_string());
        let mut chars = s.trim().chars();
        let family = match chars.next().map(|c| c.to_ascii_lowercase()) {
            Some('a') => Family::A,
            Some('b') => Family::B,
            Some('c') => Family::C,
            _ => return Err(bad()),
        };
        let rest: String = chars.collect();
        let index = rest.trim_start_matches(['_', ':']).parse().map_err(|_| bad())?;
        Ok(ClassLabel { family, index })
    }
}

impl Serialize for ClassLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_string().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ClassLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A branch cycle description `(s1, s2, s3, s4)` with `s1 s2 s3 s4 = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NielsenTuple {
    pub n: usize,
    pub sigma: [Permutation; 4],
}

pub fn check_degree(n: usize) -> Result<(), NielsenError> {
    if n < 6 || n % 2 == 1 {
        return Err(NielsenError::BadDegree(n));
    }
    if n > MAX_GROUP_DEGREE {
        return Err(NielsenError::DegreeTooLarge { degree: n, bound: MAX_GROUP_DEGREE });
    }
    Ok(())
}

/// Cycle types required of the four entries, descending with fixed points.
pub fn required_cycle_types(n: usize) -> [Vec<usize>; 4] {
    let with_ones = |mut v: Vec<usize>| {
        let used: usize = v.iter().sum();
        v.extend(std::iter::repeat_n(1, n - used));
        v
    };
    [
        with_ones(vec![n - 2]),
        with_ones(vec![3]),
        with_ones(vec![2; (n - 2) / 2]),
        vec![2; n / 2],
    ]
}

impl NielsenTuple {
    /// Validates product-one and the cycle types; generation is checked separately.
    pub fn new(sigma: [Permutation; 4]) -> Result<Self, NielsenError> {
        let n = sigma[0].degree();
        let t = NielsenTuple { n, sigma };
        t.validate_shape()?;
        Ok(t)
    }

    fn validate_shape(&self) -> Result<(), NielsenError> {
        if self.sigma.iter().any(|s| s.degree() != self.n) {
            return Err(NielsenError::InvalidTuple("mixed degrees".into()));
        }
        if !self.product().is_identity() {
            return Err(NielsenError::InvalidTuple("product is not the identity".into()));
        }
        if self.cycle_types() != required_cycle_types(self.n) {
            return Err(NielsenError::InvalidTuple(format!("cycle types {:?}", self.cycle_types())));
        }
        Ok(())
    }

    /// `s1 s2 s3 s4`.
    pub fn product(&self) -> Permutation {
        self.sigma.iter().fold(Permutation::identity(self.n), |acc, s| acc.compose_unchecked(s))
    }

    pub fn cycle_types(&self) -> [Vec<usize>; 4] {
        [0, 1, 2, 3].map(|i| self.sigma[i].cycle_type())
    }

    pub fn generates_symmetric_group(&self) -> bool {
        group_order(&self.sigma).map(|g| g.is_symmetric).unwrap_or(false)
    }

    /// Simultaneous conjugation `g s_i g^{-1}`.
    pub fn conjugate_all(&self, g: &Permutation) -> Result<NielsenTuple, NielsenError> {
        let mut out = self.sigma.clone();
        for s in out.iter_mut() {
            *s = s.conjugate(g)?;
        }
        Ok(NielsenTuple { n: self.n, sigma: out })
    }
}

impl fmt::Display for NielsenTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}]", self.sigma[0], self.sigma[1], self.sigma[2], self.sigma[3])
    }
}

/// Splits an even cycle `c` as `c = sigma tau` with `sigma` a product of
/// `m/2` disjoint transpositions and `tau` of `m/2 - 1`, anchored at the
/// one-based point `x`.
pub fn split_even_cycle(c: &Permutation, x: usize) -> Result<(Permutation, Permutation), NielsenError> {
    let n = c.degree();
    let nontrivial: Vec<Vec<usize>> = c.cycles().into_iter().filter(|cy| cy.len() > 1).collect();
    if nontrivial.len() != 1 {
        return Err(NielsenError::NotACycle);
    }
    let m = nontrivial[0].len();
    if m % 2 == 1 {
        return Err(NielsenError::OddCycleLength(m));
    }
    if x == 0 || x > n || c.apply(x - 1) == x - 1 {
        return Err(NielsenError::PointNotInSupport(x));
    }
    let x0 = x - 1;
    let step = |k: i64| c.pow(k).apply(x0) + 1;
    let mut sigma = Vec::new();
    for i in 1..=(m / 2) as i64 {
        sigma.push(vec![step(1 - i), step(i)]);
    }
    let mut tau = Vec::new();
    for j in 1..(m / 2) as i64 {
        tau.push(vec![step(j), step(-j)]);
    }
    let s = Permutation::from_cycles(n, &as_refs(&sigma))?;
    let t = Permutation::from_cycles(n, &as_refs(&tau))?;
    Ok((s, t))
}

fn as_refs(v: &[Vec<usize>]) -> Vec<&[usize]> {
    v.iter().map(Vec::as_slice).collect()
}

/// All labels in the fixed order `a_1..a_h, b_2..b_h, c_1..c_{h-2}`.
pub fn class_labels(n: usize) -> Vec<ClassLabel> {
    [Family::A, Family::B, Family::C]
        .into_iter()
        .flat_map(|f| ClassLabel::index_range(f, n).map(move |i| ClassLabel::new(f, i)))
        .collect()
}

/// The tabulated representative for `label`.
pub fn make_class(n: usize, label: ClassLabel) -> Result<NielsenTuple, NielsenError> {
    check_degree(n)?;
    if !label.in_range(n) {
        return Err(NielsenError::IndexOutOfRange { label, n });
    }
    let s1 = Permutation::consecutive_cycle(n, 1, n - 2);
    let i = label.index;
    let sigma = match label.family {
        Family::A => {
            let s2 = Permutation::from_cycles(n, &[&[n - 2, n - 1, n]])?;
            let (s, t) = split_even_cycle(&Permutation::consecutive_cycle(n, 1, n), i)?;
            [s1, s2, t, s]
        }
        Family::B => {
            let s2 = Permutation::from_cycles(n, &[&[1, n - 2, n - 1]])?;
            let nu = Permutation::transposition(n, 1, n);
            let (s, t) = split_even_cycle(&Permutation::consecutive_cycle(n, 2, n - 1), i)?;
            [s1, s2, nu.compose_unchecked(&t), nu.compose_unchecked(&s)]
        }
        Family::C => {
            let s2 = Permutation::from_cycles(n, &[&[n - 2, n - 3, n - 4]])?;
            let nu = Permutation::from_cycles(n, &[&[n, n - 2], &[n - 1, n - 3]])?;
            let (s, t) = split_even_cycle(&Permutation::consecutive_cycle(n, 1, n - 4), i)?;
            [s1, s2, nu.compose_unchecked(&t), nu.compose_unchecked(&s)]
        }
    };
    NielsenTuple::new(sigma)
}

/// Every class representative, in label order.
pub fn enumerate_sni(n: usize) -> Result<Vec<(ClassLabel, NielsenTuple)>, NielsenError> {
    check_degree(n)?;
    class_labels(n).into_iter().map(|l| Ok((l, make_class(n, l)?))).collect()
}

/// Conjugates so that `s1 = (1,...,n-2)`, then takes the lexicographically
/// smallest tuple over the centralizer of `s1`.
pub fn canonicalize(t: &NielsenTuple) -> NielsenTuple {
    let n = t.n;
    let s1 = &t.sigma[0];
    let start = s1.first_moved_point().expect("s1 is a long cycle");
    let fixed: Vec<usize> = (0..n).filter(|&x| s1.apply(x) == x).collect();
    let mut orbit = Vec::with_capacity(n - 2);
    let mut y = start;
    for _ in 0..n - 2 {
        orbit.push(y);
        y = s1.apply(y);
    }
    let mut best: Option<NielsenTuple> = None;
    let mut g = vec![0usize; n];
    for shift in 0..n - 2 {
        for swap in [false, true] {
            for (k, &p) in orbit.iter().enumerate() {
                g[p] = (k + shift) % (n - 2);
            }
            let (f0, f1) = if swap { (n - 1, n - 2) } else { (n - 2, n - 1) };
            g[fixed[0]] = f0;
            g[fixed[1]] = f1;
            let gp = Permutation::from_images(g.clone()).expect("bijection");
            let cand = NielsenTuple {
                n,
                sigma: [0, 1, 2, 3].map(|i| t.sigma[i].conjugate_unchecked(&gp)),
            };
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.expect("nonempty centralizer")
}

fn check_braid_index(i: usize) -> Result<(), NielsenError> {
    if !(1..=3).contains(&i) {
        return Err(NielsenError::BadIndex(i));
    }
    Ok(())
}

/// `Q_i`: `(s_i, s_{i+1}) -> (s_i s_{i+1} s_i^{-1}, s_i)`, not canonicalized.
pub fn braid_act_raw(t: &NielsenTuple, i: usize) -> Result<NielsenTuple, NielsenError> {
    check_braid_index(i)?;
    let mut sigma = t.sigma.clone();
    let a = &t.sigma[i - 1];
    let b = &t.sigma[i];
    sigma[i - 1] = b.conjugate_unchecked(a);
    sigma[i] = a.clone();
    Ok(NielsenTuple { n: t.n, sigma })
}

/// `Q_i^{-1}`: `(s_i, s_{i+1}) -> (s_{i+1}, s_{i+1}^{-1} s_i s_{i+1})`, not canonicalized.
pub fn braid_act_inverse_raw(t: &NielsenTuple, i: usize) -> Result<NielsenTuple, NielsenError> {
    check_braid_index(i)?;
    let mut sigma = t.sigma.clone();
    let a = &t.sigma[i - 1];
    let b = &t.sigma[i];
    sigma[i - 1] = b.clone();
    sigma[i] = a.conjugate_unchecked(&b.inverse());
    Ok(NielsenTuple { n: t.n, sigma })
}

pub fn braid_act(t: &NielsenTuple, i: usize) -> Result<NielsenTuple, NielsenError> {
    Ok(canonicalize(&braid_act_raw(t, i)?))
}

pub fn braid_act_inverse(t: &NielsenTuple, i: usize) -> Result<NielsenTuple, NielsenError> {
    Ok(canonicalize(&braid_act_inverse_raw(t, i)?))
}

/// A braid word as `(generator, exponent sign)` pairs, applied left to right.
pub type BraidWord = [(usize, bool)];

pub fn apply_word(t: &NielsenTuple, word: &BraidWord) -> Result<NielsenTuple, NielsenError> {
    let mut cur = t.clone();
    for &(i, positive) in word {
        cur = if positive { braid_act_raw(&cur, i)? } else { braid_act_inverse_raw(&cur, i)? };
    }
    Ok(canonicalize(&cur))
}

/// Class lookup from canonical forms.
pub struct ClassIndex {
    pub labels: Vec<ClassLabel>,
    pub reps: Vec<NielsenTuple>,
    by_canonical: HashMap<NielsenTuple, usize>,
}

impl ClassIndex {
    pub fn new(n: usize) -> Result<Self, NielsenError> {
        let classes = enumerate_sni(n)?;
        let mut by_canonical = HashMap::new();
        for (k, (l, t)) in classes.iter().enumerate() {
            if by_canonical.insert(canonicalize(t), k).is_some() {
                return Err(NielsenError::InvalidTuple(format!("{l} duplicates another class")));
            }
        }
        let (labels, reps) = classes.into_iter().unzip();
        Ok(ClassIndex { labels, reps, by_canonical })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn position(&self, t: &NielsenTuple) -> Option<usize> {
        self.by_canonical.get(&canonicalize(t)).copied()
    }

    /// Action of a braid word as a permutation of class positions.
    pub fn word_action(&self, word: &BraidWord) -> Result<Permutation, NielsenError> {
        let images = self
            .reps
            .iter()
            .map(|t| {
                let moved = apply_word(t, word)?;
                self.by_canonical
                    .get(&moved)
                    .copied()
                    .ok_or_else(|| NielsenError::InvalidTuple(format!("{moved} left the class list")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Permutation::from_images(images)?)
    }
}

/// Pure braids `Q_1^2`, `Q_2^2` and `Q_2^{-1} Q_3^2 Q_2`, which preserve the class list.
pub const PURE_BRAIDS: [&BraidWord; 3] = [
    &[(1, true), (1, true)],
    &[(2, true), (2, true)],
    &[(2, false), (3, true), (3, true), (2, true)],
];

/// Orbits of the pure braid generators on the class list, as sorted label lists.
pub fn braid_orbits(n: usize) -> Result<Vec<Vec<ClassLabel>>, NielsenError> {
    let idx = ClassIndex::new(n)?;
    let gens = PURE_BRAIDS.iter().map(|w| idx.word_action(w)).collect::<Result<Vec<_>, _>>()?;
    let mut seen = vec![false; idx.len()];
    let mut orbits = Vec::new();
    for s in 0..idx.len() {
        if seen[s] {
            continue;
        }
        let mut orbit = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < orbit.len() {
            for g in &gens {
                let y = g.apply(orbit[k]);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit.into_iter().map(|p| idx.labels[p]).collect());
    }
    Ok(orbits)
}

/// Every permutation of degree `n` with the given cycle type, descending.
fn all_of_cycle_type(n: usize, shape: &[usize]) -> Vec<Permutation> {
    fn rec(
        free: &mut Vec<usize>,
        shape: &[usize],
        prev_min: Option<(usize, usize)>,
        images: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        let Some((&len, rest)) = shape.split_first() else {
            out.push(Permutation::from_images(images.clone()).expect("bijection"));
            return;
        };
        if len == 1 {
            rec(free, rest, None, images, out);
            return;
        }
        // cycles of equal length are listed by increasing smallest point
        for &first in free.clone().iter() {
            if let Some((plen, pmin)) = prev_min {
                if plen == len && first < pmin {
                    continue;
                }
            }
            let others: Vec<usize> = free.iter().copied().filter(|&p| p > first).collect();
            choose_arrangements(&others, len - 1, &mut Vec::new(), &mut |tail| {
                let cyc: Vec<usize> = std::iter::once(first).chain(tail.iter().copied()).collect();
                for k in 0..cyc.len() {
                    images[cyc[k]] = cyc[(k + 1) % cyc.len()];
                }
                let mut remaining: Vec<usize> =
                    free.iter().copied().filter(|p| !cyc.contains(p)).collect();
                rec(&mut remaining, rest, Some((len, first)), images, out);
                for &p in &cyc {
                    images[p] = p;
                }
            });
        }
    }

    fn choose_arrangements(
        pool: &[usize],
        k: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for &p in pool {
            if !cur.contains(&p) {
                cur.push(p);
                choose_arrangements(pool, k, cur, f);
                cur.pop();
            }
        }
    }

    let mut free: Vec<usize> = (0..n).collect();
    let mut images: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    rec(&mut free, shape, None, &mut images, &mut out);
    out
}

/// Exhaustive search for the Nielsen class with `s1 = (1,...,n-2)`, as
/// canonical forms. Only `n` in `{6, 8}` is accepted.
pub fn brute_force_sni(n: usize, require_generation: bool) -> Result<Vec<NielsenTuple>, NielsenError> {
    check_degree(n)?;
    if n > 8 {
        return Err(NielsenError::DegreeTooLarge { degree: n, bound: 8 });
    }
    let types = required_cycle_types(n);
    let s1 = Permutation::consecutive_cycle(n, 1, n - 2);
    let threes = all_of_cycle_type(n, &types[1]);
    let invols = all_of_cycle_type(n, &types[2]);
    let mut found = BTreeSet::new();
    for s2 in &threes {
        let s12 = s1.compose_unchecked(s2);
        for s3 in &invols {
            let s4 = s12.compose_unchecked(s3).inverse();
            if s4.cycle_type() != types[3] {
                continue;
            }
            let t = NielsenTuple { n, sigma: [s1.clone(), s2.clone(), s3.clone(), s4] };
            if require_generation && !t.generates_symmetric_group() {
                continue;
            }
            found.insert(canonicalize(&t));
        }
    }
    Ok(found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn split_examples() {
        let (s, t) = split_even_cycle(&p(4, "(1,2,3,4)"), 1).unwrap();
        assert_eq!(s, p(4, "(1,2)(3,4)"));
        assert_eq!(t, p(4, "(2,4)"));
        let (s, t) = split_even_cycle(&p(2, "(1,2)"), 1).unwrap();
        assert_eq!(s, p(2, "(1,2)"));
        assert!(t.is_identity());
        assert_eq!(split_even_cycle(&p(3, "(1,2,3)"), 1), Err(NielsenError::OddCycleLength(3)));
        assert_eq!(split_even_cycle(&p(5, "(1,2,3,4)"), 5), Err(NielsenError::PointNotInSupport(5)));
    }

    #[test]
    fn split_counts_distinct_decompositions() {
        for m in [2usize, 4, 6, 8, 10] {
            let c = Permutation::consecutive_cycle(m, 1, m);
            let mut seen = BTreeSet::new();
            for x in 1..=m {
                let (s, t) = split_even_cycle(&c, x).unwrap();
                assert_eq!(s.compose(&t).unwrap(), c);
                seen.insert((s, t));
            }
            assert_eq!(seen.len(), m / 2);
        }
    }

    #[test]
    fn table_rows() {
        let a3 = make_class(6, ClassLabel::new(Family::A, 3)).unwrap();
        assert_eq!(a3.sigma[0], p(6, "(1,2,3,4)"));
        assert_eq!(a3.sigma[1], p(6, "(4,5,6)"));
        let b2 = make_class(6, ClassLabel::new(Family::B, 2)).unwrap();
        assert_eq!(b2.sigma[1], p(6, "(1,4,5)"));
        let c1 = make_class(6, ClassLabel::new(Family::C, 1)).unwrap();
        assert_eq!(c1.sigma[1], p(6, "(4,3,2)"));
        let a2 = make_class(6, ClassLabel::new(Family::A, 2)).unwrap();
        assert_eq!(a2.sigma[2], p(6, "(1,3)(4,6)"));
        assert_eq!(a2.sigma[3], p(6, "(1,4)(2,3)(5,6)"));
        assert!(matches!(
            make_class(6, ClassLabel::new(Family::C, 2)),
            Err(NielsenError::IndexOutOfRange { .. })
        ));
        assert!(a3.generates_symmetric_group());
    }

    #[test]
    fn labels_round_trip() {
        let l: ClassLabel = "b4".parse().unwrap();
        assert_eq!(l, ClassLabel::new(Family::B, 4));
        assert_eq!(serde_json::to_string(&l).unwrap(), "\"b4\"");
        assert!("d1".parse::<ClassLabel>().is_err());
    }

    #[test]
    fn cycle_type_enumeration_sizes() {
        assert_eq!(all_of_cycle_type(6, &[3, 1, 1, 1]).len(), 40);
        assert_eq!(all_of_cycle_type(6, &[2, 2, 1, 1]).len(), 45);
        assert_eq!(all_of_cycle_type(4, &[2, 2]).len(), 3);
        assert_eq!(all_of_cycle_type(5, &[5]).len(), 24);
    }

    #[test]
    fn braid_generators_are_invertible() {
        let t = make_class(8, ClassLabel::new(Family::B, 3)).unwrap();
        for i in 1..=3 {
            let there = braid_act_raw(&t, i).unwrap();
            assert_eq!(braid_act_inverse_raw(&there, i).unwrap(), t);
            assert!(there.product().is_identity());
        }
        assert_eq!(braid_act(&t, 4), Err(NielsenError::BadIndex(4)));
    }
}
