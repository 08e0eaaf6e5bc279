use proptest::prelude::*;

use hurwitz_core::algebra::linalg::{determinant, solve, LinearSolution};
use hurwitz_core::algebra::sturm::real_root_count;
use hurwitz_core::algebra::{chebyshev_t, rat, Poly, Rational, Series};
use hurwitz_core::nielsen::{apply_word, canonicalize, class_labels, make_class};
use hurwitz_core::perm::Permutation;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn small_rat() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(a, b)| rat(a, b))
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 0..=max_len).prop_map(Poly::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(p in perm(9), q in perm(9), r in perm(9)) {
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_and_text_roundtrip(p in perm(10)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert_eq!(Permutation::parse(10, &p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(p.cycle_type().iter().sum::<usize>(), 10);
        prop_assert_eq!(p.parity(), p.inverse().parity());
    }

    #[test]
    fn polynomial_ring_axioms(a in poly(5), b in poly(5), c in poly(5)) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn division_with_remainder_is_exact(a in poly(8), d in poly(4)) {
        prop_assume!(!d.is_zero());
        let (q, r) = a.divrem(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < d.degree());
    }

    #[test]
    fn linear_solve_recovers_solution(entries in prop::collection::vec(small_rat(), 16), x in prop::collection::vec(small_rat(), 4)) {
        let a: Vec<Vec<Rational>> = entries.chunks(4).map(<[Rational]>::to_vec).collect();
        prop_assume!(determinant(&a).unwrap() != Rational::default());
        let b: Vec<Rational> = a.iter().map(|row| row.iter().zip(&x).map(|(u, v)| u * v).sum()).collect();
        prop_assert_eq!(solve(&a, &b).unwrap(), LinearSolution::Unique(x));
    }

    #[test]
    fn truncation_is_a_ring_map(a in prop::collection::vec(small_rat(), 10), b in prop::collection::vec(small_rat(), 10), k in 1usize..10) {
        let (sa, sb) = (Series::from_coeffs(a, 10), Series::from_coeffs(b, 10));
        prop_assert_eq!(sa.mul(&sb).truncate(k), sa.truncate(k).mul(&sb.truncate(k)));
        prop_assert_eq!(sa.add(&sb).truncate(k), sa.truncate(k).add(&sb.truncate(k)));
    }

    #[test]
    fn sturm_count_ignores_scaling(p in poly(7), c in small_rat()) {
        prop_assume!(!p.is_zero() && c != Rational::default());
        prop_assert_eq!(real_root_count(&p).unwrap(), real_root_count(&p.scale(&c)).unwrap());
    }

    #[test]
    fn chebyshev_matches_cosine(n in 0usize..12, theta in 0.0f64..std::f64::consts::PI) {
        let t = chebyshev_t(n);
        let x = theta.cos();
        let value: f64 = t.coeffs().iter().rev().fold(0.0, |acc, c| {
            acc * x + c.numer().to_string().parse::<f64>().unwrap() / c.denom().to_string().parse::<f64>().unwrap()
        });
        prop_assert!((value - (n as f64 * theta).cos()).abs() < 1e-6);
    }

    #[test]
    fn sphere_relation_acts_trivially(n in (3usize..=8).prop_map(|h| 2 * h), pick in 0usize..100) {
        let labels = class_labels(n);
        let t = make_class(n, labels[pick % labels.len()]).unwrap();
        let word = [(1, true), (2, true), (3, true), (3, true), (2, true), (1, true)];
        prop_assert_eq!(apply_word(&t, &word).unwrap(), canonicalize(&t));
    }
}
