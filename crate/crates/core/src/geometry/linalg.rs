//! Dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::rational::Rat;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [Vec<Rat>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rat::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..rows[i].len() {
                    let delta = &f * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let ncols = first.len();
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : A x = 0}`.
pub fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -m[i][f].clone();
            }
            v
        })
        .collect()
}

/// Solves `A x = b` when the system has a unique solution. Overdetermined
/// systems are accepted as long as they are consistent.
pub fn solve_unique(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let ncols = a.first().map(Vec::len)?;
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.len() != ncols || pivots.contains(&ncols) {
        return None;
    }
    Some((0..ncols).map(|i| aug[i][ncols].clone()).collect())
}

/// Outcome of solving a possibly overdetermined system.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    Unique(Vec<Rat>),
    Underdetermined,
    Inconsistent,
}

pub fn solve_system(a: &[Vec<Rat>], b: &[Rat], ncols: usize) -> Solution {
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.contains(&ncols) {
        return Solution::Inconsistent;
    }
    if pivots.len() < ncols {
        return Solution::Underdetermined;
    }
    Solution::Unique((0..ncols).map(|i| aug[i][ncols].clone()).collect())
}

pub fn determinant(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[c][c];
                for j in c..n {
                    let delta = &f * &a[c][j];
                    a[i][j] -= delta;
                }
            }
        }
    }
    det
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug, n);
    if pivots.len() != n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Coordinates of `v` in the basis given by the rows of `basis`, i.e. the
/// `x` with `Σ x_i basis_i = v`.
pub fn coordinates(basis: &[Vec<Rat>], v: &[Rat]) -> Option<Vec<Rat>> {
    let n = v.len();
    let transposed: Vec<Vec<Rat>> = (0..n)
        .map(|j| basis.iter().map(|b| b[j].clone()).collect())
        .collect();
    solve_unique(&transposed, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_vec};

    #[test]
    fn rank_and_nullspace() {
        let m = vec![
            rat_vec(&[1, 2, 3]),
            rat_vec(&[2, 4, 6]),
            rat_vec(&[0, 1, 1]),
        ];
        assert_eq!(rank(&m), 2);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let s: Rat = row.iter().zip(&ns[0]).map(|(a, b)| a * b).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn determinant_and_inverse() {
        let m = vec![rat_vec(&[2, 1]), rat_vec(&[1, 1])];
        assert_eq!(determinant(&m), rat(1));
        let inv = inverse(&m).unwrap();
        assert_eq!(inv, vec![rat_vec(&[1, -1]), rat_vec(&[-1, 2])]);
        assert!(inverse(&[rat_vec(&[1, 2]), rat_vec(&[2, 4])]).is_none());
    }

    #[test]
    fn overdetermined_consistency() {
        let a = vec![rat_vec(&[1, 0]), rat_vec(&[0, 1]), rat_vec(&[1, 1])];
        assert_eq!(
            solve_system(&a, &rat_vec(&[1, 2, 3]), 2),
            Solution::Unique(rat_vec(&[1, 2]))
        );
        assert_eq!(
            solve_system(&a, &rat_vec(&[1, 2, 4]), 2),
            Solution::Inconsistent
        );
        assert_eq!(
            solve_system(&a[..1], &rat_vec(&[1]), 2),
            Solution::Underdetermined
        );
    }
}
