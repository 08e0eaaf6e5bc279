//! Deterministic Schreier–Sims for small permutation groups.

use serde::Serialize;

use crate::perm::{PermError, Permutation};

/// Largest degree accepted by [`group_order`].
pub const MAX_GROUP_DEGREE: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupInfo {
    pub degree: usize,
    #[serde(serialize_with = "crate::json::u128_as_string")]
    pub order: u128,
    pub is_transitive: bool,
    pub is_symmetric: bool,
    pub is_alternating: bool,
}

/// A base with transversals; `transversal[b]` maps the level's base point to `b`.
#[derive(Debug, Clone)]
struct Level {
    point: usize,
    transversal: Vec<Option<Permutation>>,
}

#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    strong_gens: Vec<Permutation>,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(gens: &[Permutation]) -> Result<Self, PermError> {
        let first = gens.first().ok_or(PermError::NoGenerators)?;
        let degree = first.degree();
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch(degree, g.degree()));
        }
        if degree > MAX_GROUP_DEGREE {
            return Err(PermError::DegreeTooLarge { degree, bound: MAX_GROUP_DEGREE });
        }
        let mut chain = StabilizerChain { degree, strong_gens: Vec::new(), levels: Vec::new() };
        for g in gens.iter().filter(|g| !g.is_identity()) {
            chain.strong_gens.push(g.clone());
            if chain.levels.iter().all(|l| g.apply(l.point) == l.point) {
                let pt = g.first_moved_point().expect("non-identity");
                chain.levels.push(Level { point: pt, transversal: Vec::new() });
            }
        }
        chain.complete();
        Ok(chain)
    }

    fn gens_fixing_prefix(&self, level: usize) -> Vec<&Permutation> {
        let prefix: Vec<usize> = self.levels[..level].iter().map(|l| l.point).collect();
        self.strong_gens
            .iter()
            .filter(|g| prefix.iter().all(|&b| g.apply(b) == b))
            .collect()
    }

    fn rebuild_transversal(&mut self, level: usize) {
        let gens: Vec<Permutation> = self.gens_fixing_prefix(level).into_iter().cloned().collect();
        let point = self.levels[level].point;
        let mut trans: Vec<Option<Permutation>> = vec![None; self.degree];
        trans[point] = Some(Permutation::identity(self.degree));
        let mut queue = vec![point];
        let mut head = 0;
        while head < queue.len() {
            let b = queue[head];
            head += 1;
            let ub = trans[b].clone().expect("orbit point");
            for s in &gens {
                let c = s.apply(b);
                if trans[c].is_none() {
                    trans[c] = Some(s.compose_unchecked(&ub));
                    queue.push(c);
                }
            }
        }
        self.levels[level].transversal = trans;
    }

    /// Sifts `g` starting at `from`; returns the residue and the level where it stopped.
    fn sift(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (k, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.apply(level.point);
            match &level.transversal[b] {
                Some(u) => g = u.inverse().compose_unchecked(&g),
                None => return (g, k),
            }
        }
        (g, self.levels.len())
    }

    fn complete(&mut self) {
        for i in 0..self.levels.len() {
            self.rebuild_transversal(i);
        }
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let level = i as usize;
            // new strong generators may enlarge orbits at shallower levels
            self.rebuild_transversal(level);
            let gens: Vec<Permutation> =
                self.gens_fixing_prefix(level).into_iter().cloned().collect();
            let orbit: Vec<usize> = (0..self.degree)
                .filter(|&b| self.levels[level].transversal[b].is_some())
                .collect();
            let mut new_gen = None;
            'search: for &b in &orbit {
                let ub = self.levels[level].transversal[b].as_ref().expect("orbit");
                for s in &gens {
                    let sb = s.apply(b);
                    let usb = self.levels[level].transversal[sb].as_ref().expect("orbit closed");
                    let schreier = usb.inverse().compose_unchecked(&s.compose_unchecked(ub));
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, j) = self.sift(schreier, level + 1);
                    if !h.is_identity() {
                        new_gen = Some((h, j));
                        break 'search;
                    }
                }
            }
            match new_gen {
                None => i -= 1,
                Some((h, j)) => {
                    if j == self.levels.len() {
                        let pt = h.first_moved_point().expect("non-identity residue");
                        self.levels.push(Level { point: pt, transversal: Vec::new() });
                    }
                    self.strong_gens.push(h);
                    for l in (level + 1)..j {
                        self.rebuild_transversal(l);
                    }
                    i = j as isize;
                }
            }
        }
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.transversal.iter().filter(|u| u.is_some()).count() as u128)
            .product()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Membership test by sifting.
    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && {
            let (h, _) = self.sift(g.clone(), 0);
            h.is_identity()
        }
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Orbit of a zero-based point under the generators.
pub fn orbit(gens: &[Permutation], point: usize) -> Vec<usize> {
    let degree = gens.first().map_or(0, Permutation::degree);
    let mut seen = vec![false; degree];
    let mut out = vec![point];
    seen[point] = true;
    let mut head = 0;
    while head < out.len() {
        let b = out[head];
        head += 1;
        for g in gens {
            let c = g.apply(b);
            if !seen[c] {
                seen[c] = true;
                out.push(c);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn is_transitive(gens: &[Permutation]) -> bool {
    gens.first().is_some_and(|g| orbit(gens, 0).len() == g.degree())
}

/// Order of the generated group plus symmetric / alternating recognition.
pub fn group_order(gens: &[Permutation]) -> Result<GroupInfo, PermError> {
    let chain = StabilizerChain::new(gens)?;
    let degree = chain.degree;
    let order = chain.order();
    let full = factorial(degree);
    Ok(GroupInfo {
        degree,
        order,
        is_transitive: is_transitive(gens),
        is_symmetric: order == full,
        is_alternating: degree >= 2 && order * 2 == full && gens.iter().all(Permutation::is_even),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(deg: usize, s: &str) -> Permutation {
        Permutation::parse(deg, s).unwrap()
    }

    #[test]
    fn symmetric_group_from_transposition_and_cycle() {
        let info = group_order(&[p(6, "(1,2)"), p(6, "(1,2,3,4,5,6)")]).unwrap();
        assert_eq!(info.order, 720);
        assert!(info.is_symmetric && info.is_transitive && !info.is_alternating);
    }

    #[test]
    fn cyclic_group() {
        let info = group_order(&[p(3, "(1,2,3)")]).unwrap();
        assert_eq!(info.order, 3);
        assert!(info.is_alternating);
    }

    #[test]
    fn jordan_prime_degree() {
        for n in [5usize, 7] {
            let info = group_order(&[
                Permutation::consecutive_cycle(n, 1, n),
                Permutation::transposition(n, 1, 2),
            ])
            .unwrap();
            assert_eq!(info.order, factorial(n));
        }
    }

    #[test]
    fn alternating_and_dihedral() {
        let a5 = group_order(&[p(5, "(1,2,3)"), p(5, "(1,2,3,4,5)")]).unwrap();
        assert_eq!(a5.order, 60);
        assert!(a5.is_alternating);
        let d8 = group_order(&[p(8, "(1,2,3,4,5,6,7,8)"), p(8, "(2,8)(3,7)(4,6)")]).unwrap();
        assert_eq!(d8.order, 16);
        let klein = group_order(&[p(4, "(1,2)(3,4)"), p(4, "(1,3)(2,4)")]).unwrap();
        assert_eq!(klein.order, 4);
    }

    #[test]
    fn large_degrees() {
        let n = 24;
        let info = group_order(&[
            Permutation::consecutive_cycle(n, 1, n),
            Permutation::transposition(n, 1, 2),
        ])
        .unwrap();
        assert_eq!(info.order, factorial(24));
        let too_big = Permutation::identity(25);
        assert!(matches!(group_order(&[too_big]), Err(PermError::DegreeTooLarge { .. })));
    }

    #[test]
    fn membership() {
        let chain = StabilizerChain::new(&[p(5, "(1,2,3)"), p(5, "(3,4,5)")]).unwrap();
        assert_eq!(chain.order(), 60);
        assert!(chain.contains(&p(5, "(1,5)(2,4)")));
        assert!(!chain.contains(&p(5, "(1,2)")));
    }
}
