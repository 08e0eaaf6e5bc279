use std::collections::BTreeSet;

use hurwitz_core::descent::{an_product, descent_check, find_totally_real_classes};
use hurwitz_core::monodromy::{closed_form_monodromy, expected_ramification, gamma_monodromy};
use hurwitz_core::nielsen::{
    braid_act_raw, braid_orbits, brute_force_sni, canonicalize, class_labels, enumerate_sni,
    make_class, ClassLabel, Family,
};
use hurwitz_core::perm::Permutation;

fn even_range() -> impl Iterator<Item = usize> {
    (6..=20).step_by(2)
}

#[test]
fn class_counts_and_family_sizes() {
    for n in even_range() {
        let classes = enumerate_sni(n).unwrap();
        assert_eq!(classes.len(), 3 * (n / 2 - 1));
        let count = |f| classes.iter().filter(|(l, _)| l.family == f).count();
        assert_eq!((count(Family::A), count(Family::B), count(Family::C)), (n / 2, n / 2 - 1, n / 2 - 2));
        for (_, t) in &classes {
            assert!(t.generates_symmetric_group());
        }
        let canon: BTreeSet<_> = classes.iter().map(|(_, t)| canonicalize(t)).collect();
        assert_eq!(canon.len(), classes.len());
    }
}

#[test]
fn exhaustive_search_agrees() {
    for n in [6, 8] {
        let brute: BTreeSet<_> = brute_force_sni(n, true).unwrap().into_iter().collect();
        let listed: BTreeSet<_> = enumerate_sni(n).unwrap().iter().map(|(_, t)| canonicalize(t)).collect();
        assert_eq!(brute, listed);
    }
    assert!(brute_force_sni(6, false).unwrap().len() >= 6);
    assert!(brute_force_sni(10, true).is_err());
}

#[test]
fn canonical_forms_are_class_functions() {
    let t = make_class(10, ClassLabel::new(Family::C, 2)).unwrap();
    let c = canonicalize(&t);
    assert_eq!(canonicalize(&c), c);
    for g in ["(1,5,9)(2,7)", "(1,10)", "(3,4,5,6,7,8)"] {
        let g = Permutation::parse(10, g).unwrap();
        assert_eq!(canonicalize(&t.conjugate_all(&g).unwrap()), c);
    }
}

#[test]
fn double_braid_conjugates_by_the_pair_product() {
    let t = make_class(8, ClassLabel::new(Family::A, 2)).unwrap();
    let twice = braid_act_raw(&braid_act_raw(&t, 1).unwrap(), 1).unwrap();
    let g = t.sigma[0].compose(&t.sigma[1]).unwrap();
    assert_eq!(twice.sigma[0], t.sigma[0].conjugate(&g).unwrap());
    assert_eq!(twice.sigma[1], t.sigma[1].conjugate(&g).unwrap());
    assert_eq!(twice.sigma[2..], t.sigma[2..]);
}

#[test]
fn single_braid_orbit() {
    let orbits = braid_orbits(6).unwrap();
    assert_eq!(orbits.len(), 1);
    assert_eq!(orbits[0].len(), 6);
}

#[test]
fn hurwitz_curve_is_rational() {
    for n in even_range() {
        let r = gamma_monodromy(n).unwrap();
        assert_eq!(r.cycle_types(), expected_ramification(n), "n = {n}");
        assert_eq!(r.orbit_count, 1);
        assert_eq!(r.genus, 0);
        assert!(r.gamma3_closes);
        assert_eq!(r.gamma2.cycle_type.iter().filter(|&&e| e == 5).count(), 1);
        assert_eq!(r.labels, class_labels(n));
    }
}

#[test]
fn closed_form_monodromy_from_ten() {
    for n in (10..=20).step_by(2) {
        let r = gamma_monodromy(n).unwrap();
        let [g1, g2, g12] = closed_form_monodromy(n).unwrap();
        assert_eq!((r.gamma1.perm, r.gamma2.perm, r.gamma12.perm), (g1, g2, g12), "n = {n}");
    }
}

#[test]
fn unique_totally_real_class() {
    for n in even_range() {
        assert_eq!(find_totally_real_classes(n).unwrap(), vec![ClassLabel::new(Family::A, n / 2 - 1)]);
    }
    let t = make_class(8, ClassLabel::new(Family::A, 3)).unwrap();
    let g = Permutation::parse(8, "(1,2,3)(5,8)").unwrap();
    let moved = descent_check(&t.conjugate_all(&g).unwrap());
    assert!(moved.totally_real);
}

#[test]
fn sheet_lift_parity_pattern() {
    for n in [6, 8, 10, 12] {
        let t = make_class(n, ClassLabel::new(Family::A, n / 2 - 1)).unwrap();
        let lift = an_product(&t).unwrap();
        let expected = if n % 4 == 0 { vec![1, 3] } else { vec![1, 4] };
        assert_eq!(lift.quadratic_branch_points, expected);
        assert!(lift.product_is_identity());
        let g = lift.group.clone().unwrap();
        assert_eq!(g.order, hurwitz_core::group::factorial(n));
        assert!(g.is_transitive);
        assert!(descent_check(&lift.as_tuple()).totally_real);
    }
}
