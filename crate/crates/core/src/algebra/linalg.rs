//! Exact dense linear algebra over Q.
//!
//! Elimination picks the first nonzero pivot in each column, so results are
//! reproducible across runs.

use num_traits::{One, Zero};

use super::{AlgebraError, Rational};

pub type Matrix = Vec<Vec<Rational>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<Rational>),
    /// One particular solution plus a nullspace basis.
    Underdetermined { particular: Vec<Rational>, kernel: Vec<Vec<Rational>> },
    Inconsistent,
}

fn check_rect(a: &[Vec<Rational>]) -> Result<usize, AlgebraError> {
    let cols = a.first().map_or(0, Vec::len);
    if a.iter().any(|r| r.len() != cols) {
        return Err(AlgebraError::DimensionMismatch("ragged matrix".into()));
    }
    Ok(cols)
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut Matrix, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in m[row].iter_mut() {
            *c *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, y) in other.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

fn kernel_from_rref(m: &Matrix, pivots: &[usize], ncols: usize) -> Vec<Vec<Rational>> {
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Solves `a x = b`.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<LinearSolution, AlgebraError> {
    let ncols = check_rect(a)?;
    if a.len() != b.len() {
        return Err(AlgebraError::DimensionMismatch(format!(
            "{} rows against right side of length {}",
            a.len(),
            b.len()
        )));
    }
    let mut m: Matrix =
        a.iter().zip(b).map(|(r, bi)| r.iter().cloned().chain([bi.clone()]).collect()).collect();
    let pivots = rref(&mut m, ncols);
    let rank = pivots.len();
    if m.iter().skip(rank).any(|r| !r[ncols].is_zero()) {
        return Ok(LinearSolution::Inconsistent);
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m[r][ncols].clone();
    }
    if rank == ncols {
        Ok(LinearSolution::Unique(x))
    } else {
        Ok(LinearSolution::Underdetermined {
            particular: x,
            kernel: kernel_from_rref(&m, &pivots, ncols),
        })
    }
}

/// Basis of `{x : a x = 0}`, one vector per free column.
pub fn nullspace(a: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>, AlgebraError> {
    let ncols = check_rect(a)?;
    let mut m = a.to_vec();
    let pivots = rref(&mut m, ncols);
    Ok(kernel_from_rref(&m, &pivots, ncols))
}

pub fn rank(a: &[Vec<Rational>]) -> Result<usize, AlgebraError> {
    let ncols = check_rect(a)?;
    let mut m = a.to_vec();
    Ok(rref(&mut m, ncols).len())
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(a: &[Vec<Rational>]) -> Result<Option<Matrix>, AlgebraError> {
    let n = check_rect(a)?;
    if n != a.len() {
        return Err(AlgebraError::DimensionMismatch("inverse of a non-square matrix".into()));
    }
    let mut m: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut m, n);
    if pivots.len() < n {
        return Ok(None);
    }
    Ok(Some(m.into_iter().map(|r| r[n..].to_vec()).collect()))
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(a: &[Vec<Rational>]) -> Result<Rational, AlgebraError> {
    let n = check_rect(a)?;
    if n != a.len() {
        return Err(AlgebraError::DimensionMismatch("determinant of a non-square matrix".into()));
    }
    let mut m = a.to_vec();
    let mut sign = Rational::one();
    let mut prev = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    Ok(sign * prev)
}

pub fn mat_vec(a: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| row.iter().zip(x).filter(|(r, _)| !r.is_zero()).map(|(r, v)| r * v).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rint};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| rint(x)).collect()).collect()
    }

    #[test]
    fn unique_solution() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let b = vec![rint(3), rint(5)];
        match solve(&a, &b).unwrap() {
            LinearSolution::Unique(x) => {
                assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
                assert_eq!(mat_vec(&a, &x), b);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(determinant(&a).unwrap(), rint(5));
    }

    #[test]
    fn singular_cases() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(solve(&a, &[rint(1), rint(3)]).unwrap(), LinearSolution::Inconsistent);
        match solve(&a, &[rint(1), rint(2)]).unwrap() {
            LinearSolution::Underdetermined { particular, kernel } => {
                assert_eq!(kernel.len(), 2);
                for k in &kernel {
                    assert!(mat_vec(&a, k).iter().all(Zero::is_zero));
                }
                assert_eq!(mat_vec(&a, &particular), vec![rint(1), rint(2)]);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(rank(&a).unwrap(), 1);
        assert_eq!(inverse(&m(&[&[1, 2], &[2, 4]])).unwrap(), None);
        assert!(solve(&a, &[rint(1)]).is_err());
    }

    #[test]
    fn inverse_and_determinant_agree() {
        let a = m(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        let inv = inverse(&a).unwrap().unwrap();
        for (i, row) in a.iter().enumerate() {
            for j in 0..3 {
                let e: Rational = row.iter().zip(&inv).map(|(x, r)| x * &r[j]).sum();
                assert_eq!(e, if i == j { rint(1) } else { rint(0) });
            }
        }
        assert_eq!(determinant(&a).unwrap(), rint(-2));
    }
}
