//! Rational polyhedral cones in the positive orthant.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::hull::combinations;
use crate::geometry::linalg::{coordinates, inverse, nullspace, rank};
use crate::rational::{dot, primitive_i64, Rat, RatVec};

pub type Ray = Vec<i64>;

pub fn ray_to_rat(r: &[i64]) -> RatVec {
    r.iter().map(|&x| Rat::from_integer(x.into())).collect()
}

/// Global order on rays: by coordinate sum, then with `e_1` before `e_2`.
pub fn ray_key(r: &[i64]) -> (i64, Reverse<Vec<i64>>) {
    (r.iter().sum(), Reverse(r.to_vec()))
}

/// Primitive integer vector on the ray of a nonzero nonnegative vector.
pub fn primitive_ray(v: &[Rat]) -> Result<Ray> {
    if v.iter().any(|x| *x < Rat::zero()) || v.iter().all(Zero::is_zero) {
        return Err(Error::InvalidArgument(
            "ray must be nonzero and nonnegative".into(),
        ));
    }
    primitive_i64(v)
}

pub fn is_interior_ray(r: &[i64]) -> bool {
    r.iter().all(|&x| x > 0)
}

/// A simplicial cone spanned by primitive rays.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    rays: Vec<Ray>,
}

impl Cone {
    pub fn new(rays: Vec<Ray>) -> Result<Self> {
        let Some(n) = rays.first().map(Vec::len) else {
            return Err(Error::Empty("cone"));
        };
        let mut prim = Vec::with_capacity(rays.len());
        for r in &rays {
            if r.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: r.len(),
                });
            }
            prim.push(primitive_ray(&ray_to_rat(r))?);
        }
        let rats: Vec<RatVec> = prim.iter().map(|r| ray_to_rat(r)).collect();
        if rank(&rats) != prim.len() {
            return Err(Error::NonSimplicial);
        }
        Ok(Cone { rays: prim })
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn dim(&self) -> usize {
        self.rays.len()
    }

    /// Coordinates of `w` in the ray basis, if `w` lies in the span.
    pub fn coordinates(&self, w: &[Rat]) -> Option<RatVec> {
        let basis: Vec<RatVec> = self.rays.iter().map(|r| ray_to_rat(r)).collect();
        coordinates(&basis, w)
    }

    pub fn contains(&self, w: &[Rat]) -> bool {
        self.coordinates(w)
            .is_some_and(|c| c.iter().all(|x| *x >= Rat::zero()))
    }

    pub fn contains_in_relint(&self, w: &[Rat]) -> bool {
        self.coordinates(w)
            .is_some_and(|c| c.iter().all(|x| *x > Rat::zero()))
    }

    /// Absolute determinant of the ray matrix, for full-dimensional cones.
    pub fn multiplicity(&self) -> Rat {
        let m: Vec<RatVec> = self.rays.iter().map(|r| ray_to_rat(r)).collect();
        let d = crate::geometry::linalg::determinant(&m);
        if d < Rat::zero() {
            -d
        } else {
            d
        }
    }

    /// Smooth: the rays extend to a lattice basis (checked for full cones).
    pub fn is_smooth(&self) -> bool {
        self.dim() == self.rays[0].len() && self.multiplicity() == Rat::from_integer(1.into())
    }
}

/// Inequalities `⟨a, w⟩ ≥ 0` describing a full-dimensional simplicial cone.
pub fn simplicial_inequalities(rays: &[Ray]) -> Option<Vec<RatVec>> {
    let m: Vec<RatVec> = rays.iter().map(|r| ray_to_rat(r)).collect();
    let inv = inverse(&m)?;
    let n = m.len();
    // Coordinates of w are w·inv, so column j of inv is the j-th inequality.
    Some(
        (0..n)
            .map(|j| (0..n).map(|i| inv[i][j].clone()).collect())
            .collect(),
    )
}

/// Extreme rays of the pointed cone `{w : ⟨a, w⟩ ≥ 0}` (caller includes
/// the orthant constraints).
pub fn extreme_rays(ineqs: &[RatVec], n: usize) -> Result<Vec<Ray>> {
    let mut out = BTreeSet::new();
    if n == 1 {
        let one = vec![Rat::from_integer(1.into())];
        if ineqs.iter().all(|a| dot(a, &one) >= Rat::zero()) {
            out.insert(vec![1]);
        }
        return Ok(out.into_iter().collect());
    }
    for idx in combinations(ineqs.len(), n - 1) {
        let rows: Vec<RatVec> = idx.iter().map(|&i| ineqs[i].clone()).collect();
        let ns = nullspace(&rows, n);
        if ns.len() != 1 {
            continue;
        }
        for sign in [1i64, -1] {
            let v: RatVec = ns[0]
                .iter()
                .map(|x| x * Rat::from_integer(sign.into()))
                .collect();
            if ineqs.iter().all(|a| dot(a, &v) >= Rat::zero())
                && v.iter().all(|x| *x >= Rat::zero())
            {
                out.insert(primitive_ray(&v)?);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Pulling triangulation of the cone with extreme rays `rays` and
/// H-description `ineqs`, pulling rays in the global [`ray_key`] order.
/// Returns index sets into `rays`.
pub fn pulling_triangulation(rays: &[Ray], ineqs: &[RatVec]) -> Vec<Vec<usize>> {
    let rats: Vec<RatVec> = rays.iter().map(|r| ray_to_rat(r)).collect();
    let all: Vec<usize> = (0..rays.len()).collect();
    let k = rank(&rats);
    let mut out = Vec::new();
    pull(&all, k, rays, &rats, ineqs, &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out.dedup();
    out
}

fn pull(
    face: &[usize],
    k: usize,
    rays: &[Ray],
    rats: &[RatVec],
    ineqs: &[RatVec],
    out: &mut Vec<Vec<usize>>,
) {
    if face.len() == k {
        out.push(face.to_vec());
        return;
    }
    let &apex = face
        .iter()
        .min_by_key(|&&i| ray_key(&rays[i]))
        .expect("face is nonempty");
    let mut facets = BTreeSet::new();
    for a in ineqs {
        let tight: Vec<usize> = face
            .iter()
            .copied()
            .filter(|&i| dot(a, &rats[i]).is_zero())
            .collect();
        if tight.len() == face.len() || tight.contains(&apex) || tight.is_empty() {
            continue;
        }
        let sub: Vec<RatVec> = tight.iter().map(|&i| rats[i].clone()).collect();
        if rank(&sub) == k - 1 {
            facets.insert(tight);
        }
    }
    for f in facets {
        let mut sub = Vec::new();
        pull(&f, k - 1, rays, rats, ineqs, &mut sub);
        for mut s in sub {
            s.push(apex);
            out.push(s);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_vec;

    #[test]
    fn cone_membership() {
        let c = Cone::new(vec![vec![1, 0], vec![1, 1]]).unwrap();
        assert!(c.contains(&rat_vec(&[2, 1])));
        assert!(!c.contains(&rat_vec(&[1, 2])));
        assert!(c.contains_in_relint(&rat_vec(&[2, 1])));
        assert!(!c.contains_in_relint(&rat_vec(&[1, 0])));
        assert!(c.is_smooth());
        assert!(!Cone::new(vec![vec![2, 1], vec![1, 2]]).unwrap().is_smooth());
        assert_eq!(
            Cone::new(vec![vec![1, 1], vec![2, 2]]),
            Err(Error::NonSimplicial)
        );
    }

    #[test]
    fn square_cone_is_split_in_two() {
        // cone over a square: rays (1,0,0),(0,1,0),(1,0,1),(0,1,1)
        let rays = vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 1]];
        let ineqs = vec![
            rat_vec(&[1, 0, 0]),
            rat_vec(&[0, 1, 0]),
            rat_vec(&[0, 0, 1]),
            rat_vec(&[1, 1, -1]),
        ];
        assert_eq!(extreme_rays(&ineqs, 3).unwrap().len(), 4);
        let t = pulling_triangulation(&rays, &ineqs);
        assert_eq!(t.len(), 2);
        assert!(t.iter().all(|c| c.len() == 3 && c.contains(&0)));
    }
}
