//! Descent of a cover to the reals, totally real fibers, and the
//! sheet-doubling construction for the alternating group.

use serde::Serialize;

use crate::group::{group_order, GroupInfo};
use crate::nielsen::{check_degree, enumerate_sni, ClassLabel, NielsenError, NielsenTuple};
use crate::perm::{PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DescentVerdict {
    pub defined_over_r: bool,
    pub tau: Option<Permutation>,
    pub totally_real: bool,
}

/// Descent test for the branch-point ordering `z2 < z3 < z4 < z1`.
///
/// The involution is forced by `s4^{-1} = tau s4`, so `tau = s4^{-2}`; the
/// remaining relations are then checked directly.
pub fn descent_check(t: &NielsenTuple) -> DescentVerdict {
    let [s1, s2, s3, s4] = &t.sigma;
    let s4_inv = s4.inverse();
    let tau = s4_inv.compose_unchecked(&s4_inv);
    let holds = tau.compose_unchecked(&tau).is_identity()
        && s1.inverse().conjugate_unchecked(s4) == tau.compose_unchecked(s1)
        && s4_inv == tau.compose_unchecked(s4)
        && s3.inverse() == tau.compose_unchecked(s3)
        && s3.inverse().compose_unchecked(&s2.inverse()).compose_unchecked(s3)
            == tau.compose_unchecked(s2);
    if !holds {
        return DescentVerdict { defined_over_r: false, tau: None, totally_real: false };
    }
    let totally_real = tau.is_identity();
    DescentVerdict { defined_over_r: true, tau: Some(tau), totally_real }
}

/// Labels whose class passes the descent test with `tau` trivial.
pub fn find_totally_real_classes(n: usize) -> Result<Vec<ClassLabel>, NielsenError> {
    Ok(enumerate_sni(n)?
        .into_iter()
        .filter(|(_, t)| descent_check(t).totally_real)
        .map(|(l, _)| l)
        .collect())
}

/// The doubled tuple `(s_i x tau_i)` on `{1..n} x {1,2}`.
#[derive(Debug, Clone, Serialize)]
pub struct SheetLift {
    pub n: usize,
    pub sigma: [Permutation; 4],
    /// Whether each `s_i` is odd, i.e. swaps the two sheets.
    pub odd: [bool; 4],
    /// One-based branch points `z_i` over which the quadratic subcover ramifies.
    pub quadratic_branch_points: Vec<usize>,
    pub group: Option<GroupInfo>,
}

/// Point `(k, s)` of `{1..n} x {1,2}` as the zero-based integer `k + n(s-1) - 1`.
fn lift_one(p: &Permutation, swap: bool) -> Permutation {
    let n = p.degree();
    let images = (0..2 * n)
        .map(|x| {
            let (k, s) = (x % n, x / n);
            let s2 = if swap { 1 - s } else { s };
            p.apply(k) + n * s2
        })
        .collect();
    Permutation::from_images(images).expect("product of bijections")
}

pub fn an_product(t: &NielsenTuple) -> Result<SheetLift, NielsenError> {
    check_degree(t.n)?;
    let odd = [0, 1, 2, 3].map(|i| !t.sigma[i].is_even());
    if odd.iter().filter(|&&o| o).count() != 2 {
        return Err(NielsenError::InvalidTuple(format!("parity pattern {odd:?}")));
    }
    let sigma = [0, 1, 2, 3].map(|i| lift_one(&t.sigma[i], odd[i]));
    let group = match group_order(&sigma) {
        Ok(g) => Some(g),
        Err(PermError::DegreeTooLarge { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let quadratic_branch_points = (1..=4).filter(|&i| odd[i - 1]).collect();
    Ok(SheetLift { n: t.n, sigma, odd, quadratic_branch_points, group })
}

impl SheetLift {
    pub fn as_tuple(&self) -> NielsenTuple {
        NielsenTuple { n: 2 * self.n, sigma: self.sigma.clone() }
    }

    pub fn product_is_identity(&self) -> bool {
        self.as_tuple().product().is_identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nielsen::{make_class, Family};

    #[test]
    fn distinguished_class_at_six() {
        let t = make_class(6, ClassLabel::new(Family::A, 2)).unwrap();
        let v = descent_check(&t);
        assert!(v.defined_over_r && v.totally_real);
        assert!(v.tau.unwrap().is_identity());
        let a1 = make_class(6, ClassLabel::new(Family::A, 1)).unwrap();
        assert!(!descent_check(&a1).totally_real);
        assert_eq!(find_totally_real_classes(8).unwrap(), vec![ClassLabel::new(Family::A, 3)]);
    }

    #[test]
    fn sheet_lift() {
        let t = make_class(6, ClassLabel::new(Family::A, 2)).unwrap();
        let lift = an_product(&t).unwrap();
        assert_eq!(lift.odd, [true, false, false, true]);
        assert_eq!(lift.quadratic_branch_points, vec![1, 4]);
        assert!(lift.product_is_identity());
        assert!(lift.sigma.iter().all(Permutation::is_even));
        let g = lift.group.clone().unwrap();
        assert_eq!(g.order, 720);
        assert!(g.is_transitive);
        assert!(descent_check(&lift.as_tuple()).totally_real);
    }
}
