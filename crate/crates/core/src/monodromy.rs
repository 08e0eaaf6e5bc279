//! Monodromy of the Hurwitz curve: the pure braids `Q_1^2`, `Q_2^2` and
//! `Q_2^{-1} Q_3^2 Q_2` acting on the class list.

use serde::Serialize;

use crate::group::orbit;
use crate::nielsen::{check_degree, ClassIndex, ClassLabel, Family, NielsenError, PURE_BRAIDS};
use crate::perm::Permutation;

/// A permutation of class labels, shown as label cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelPermutation {
    pub cycles: Vec<Vec<ClassLabel>>,
    pub cycle_type: Vec<usize>,
    #[serde(skip)]
    pub perm: Permutation,
}

impl LabelPermutation {
    pub fn new(perm: Permutation, labels: &[ClassLabel]) -> Self {
        let cycles = perm
            .cycles()
            .into_iter()
            .map(|c| c.into_iter().map(|k| labels[k]).collect())
            .collect();
        LabelPermutation { cycles, cycle_type: perm.cycle_type(), perm }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MonodromyReport {
    pub n: usize,
    pub degree: usize,
    pub labels: Vec<ClassLabel>,
    pub gamma1: LabelPermutation,
    pub gamma2: LabelPermutation,
    /// The product `gamma1 gamma2`, `gamma2` acting first.
    pub gamma12: LabelPermutation,
    pub gamma3_closes: bool,
    pub orbit_count: usize,
    pub genus: i64,
}

impl MonodromyReport {
    pub fn cycle_types(&self) -> [Vec<usize>; 3] {
        [self.gamma1.cycle_type.clone(), self.gamma2.cycle_type.clone(), self.gamma12.cycle_type.clone()]
    }
}

/// Riemann–Hurwitz genus of a cover of the line with the given fiber permutations.
pub fn riemann_hurwitz_genus(degree: usize, perms: &[&Permutation]) -> i64 {
    let ram: i64 = perms.iter().map(|p| (degree - p.cycles().len()) as i64).sum();
    (ram - 2 * degree as i64 + 2) / 2
}

pub fn gamma_monodromy(n: usize) -> Result<MonodromyReport, NielsenError> {
    check_degree(n)?;
    let idx = ClassIndex::new(n)?;
    let [g1, g2, g3] = PURE_BRAIDS.map(|w| idx.word_action(w));
    let (g1, g2, g3) = (g1?, g2?, g3?);
    let g12 = g1.compose_unchecked(&g2);
    // braids act on the right: "g1 then g2" is g2 ∘ g1
    let closes = g3.compose_unchecked(&g2.compose_unchecked(&g1)).is_identity();
    let d = idx.len();
    let orbit_count = count_orbits(&[g1.clone(), g2.clone()], d);
    let genus = riemann_hurwitz_genus(d, &[&g1, &g2, &g3]);
    Ok(MonodromyReport {
        n,
        degree: d,
        gamma1: LabelPermutation::new(g1, &idx.labels),
        gamma2: LabelPermutation::new(g2, &idx.labels),
        gamma12: LabelPermutation::new(g12, &idx.labels),
        labels: idx.labels,
        gamma3_closes: closes,
        orbit_count,
        genus,
    })
}

fn count_orbits(gens: &[Permutation], d: usize) -> usize {
    let mut seen = vec![false; d];
    let mut count = 0;
    for s in 0..d {
        if !seen[s] {
            count += 1;
            for x in orbit(gens, s) {
                seen[x] = true;
            }
        }
    }
    count
}

fn partition(mut parts: Vec<usize>) -> Vec<usize> {
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Expected cycle types over the three branch points of the Hurwitz curve.
pub fn expected_ramification(n: usize) -> [Vec<usize>; 3] {
    let h = n / 2;
    let z1 = partition(vec![h, h - 1, h - 2]);
    let (z2, z3) = if n.is_multiple_of(4) {
        let mut z2 = vec![5, 1, 1];
        z2.extend(std::iter::repeat_n(2, 3 * n / 4 - 5));
        let mut z3 = vec![3];
        z3.extend(std::iter::repeat_n(2, 3 * n / 4 - 3));
        (z2, z3)
    } else {
        let mut z2 = vec![5, 1];
        z2.extend(std::iter::repeat_n(2, 3 * (n - 6) / 4));
        let mut z3 = vec![3, 1];
        z3.extend(std::iter::repeat_n(2, (3 * n - 14) / 4));
        (z2, z3)
    };
    [z1, partition(z2), partition(z3)]
}

fn label_perm(labels: &[ClassLabel], cycles: &[Vec<ClassLabel>]) -> Result<Permutation, NielsenError> {
    let pos = |l: &ClassLabel| {
        labels
            .iter()
            .position(|m| m == l)
            .ok_or(NielsenError::IndexOutOfRange { label: *l, n: 0 })
    };
    let mut images: Vec<usize> = (0..labels.len()).collect();
    for c in cycles {
        for k in 0..c.len() {
            images[pos(&c[k])?] = pos(&c[(k + 1) % c.len()])?;
        }
    }
    Ok(Permutation::from_images(images)?)
}

/// The closed-form actions of `gamma1`, `gamma2` and `gamma1 gamma2`.
///
/// Index expressions that fall outside the label ranges (small `n`) produce
/// an `IndexOutOfRange` error or a non-bijection.
pub fn closed_form_monodromy(n: usize) -> Result<[Permutation; 3], NielsenError> {
    check_degree(n)?;
    let h = n / 2;
    let labels = crate::nielsen::class_labels(n);
    let a = |i: usize| ClassLabel::new(Family::A, i);
    let b = |i: usize| ClassLabel::new(Family::B, i);
    let c = |i: usize| ClassLabel::new(Family::C, i);
    for l in [a(h - 3), c(h - 3), b(h - 2)] {
        if !l.in_range(n) {
            return Err(NielsenError::IndexOutOfRange { label: l, n });
        }
    }

    let g1 = vec![
        (1..=h).rev().map(a).collect::<Vec<_>>(),
        (2..=h).rev().map(b).collect(),
        (1..=h - 2).rev().map(c).collect(),
    ];

    let mut g2 = vec![vec![a(h - 2), b(h), b(h - 1), a(h), c(h - 2)]];
    g2.extend((1..h - 2).map(|j| vec![a(j), c(h - 2 - j)]));
    let kmax = if n.is_multiple_of(4) { n / 4 - 1 } else { (n - 2) / 4 };
    g2.extend((2..=kmax).map(|k| vec![b(k), b(h - k)]));

    let mut g12 = vec![vec![a(h - 1), a(h - 2), b(h - 1)]];
    g12.extend((1..h - 3).map(|j| vec![c(j), a(h - 3 - j)]));
    g12.push(vec![c(h - 3), a(h)]);
    g12.push(vec![c(h - 2), a(h - 3)]);
    g12.push(vec![b(h), b(h - 2)]);
    let kend = if n.is_multiple_of(4) { n / 4 } else { (n - 2) / 4 };
    g12.extend((3..=kend).map(|k| vec![b(h - k), b(k - 1)]));

    Ok([label_perm(&labels, &g1)?, label_perm(&labels, &g2)?, label_perm(&labels, &g12)?])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_match_the_table() {
        let r = gamma_monodromy(6).unwrap();
        assert_eq!(r.degree, 6);
        assert_eq!(r.cycle_types(), [vec![3, 2, 1], vec![5, 1], vec![3, 2, 1]]);
        assert_eq!(r.genus, 0);
        assert_eq!(r.orbit_count, 1);
        assert!(r.gamma3_closes);
        let r8 = gamma_monodromy(8).unwrap();
        assert_eq!(r8.cycle_types(), expected_ramification(8));
    }

    #[test]
    fn expected_partitions() {
        assert_eq!(expected_ramification(6), [vec![3, 2, 1], vec![5, 1], vec![3, 2, 1]]);
        assert_eq!(expected_ramification(8), [vec![4, 3, 2], vec![5, 2, 1, 1], vec![3, 2, 2, 2]]);
        assert_eq!(
            expected_ramification(12),
            [vec![6, 5, 4], vec![5, 2, 2, 2, 2, 1, 1], vec![3, 2, 2, 2, 2, 2, 2]]
        );
        for n in (6..=20).step_by(2) {
            for p in expected_ramification(n) {
                assert_eq!(p.iter().sum::<usize>(), 3 * (n / 2 - 1));
            }
        }
    }

    #[test]
    fn closed_form_at_ten() {
        let r = gamma_monodromy(10).unwrap();
        let [c1, c2, c12] = closed_form_monodromy(10).unwrap();
        assert_eq!(r.gamma1.perm, c1);
        assert_eq!(r.gamma2.perm, c2);
        assert_eq!(r.gamma12.perm, c12);
    }
}
