//! Simplicial fans refining the positive orthant.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::linalg::rank;
use crate::geometry::NewtonRegion;
use crate::rational::{check_dim, Rat, RatVec};
use crate::toric::cone::{
    extreme_rays, is_interior_ray, primitive_ray, pulling_triangulation, ray_key, ray_to_rat,
    simplicial_inequalities, Cone, Ray,
};

/// A fan with full-dimensional simplicial maximal cones covering the orthant.
///
/// Rays are kept in the global ray order and cones as sorted index lists, so
/// equal fans compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fan {
    dim: usize,
    rays: Vec<Ray>,
    cones: Vec<Vec<usize>>,
}

impl Fan {
    /// The fan of the identity model: one cone spanned by `e_1, …, e_n`.
    pub fn orthant(n: usize) -> Self {
        let rays = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        Fan::canonical(n, rays, vec![(0..n).collect()])
    }

    /// Builds a fan and checks that it is simplicial, face to face, and
    /// covers the orthant exactly.
    pub fn new(dim: usize, rays: Vec<Ray>, cones: Vec<Vec<usize>>) -> Result<Self> {
        let mut prim = Vec::with_capacity(rays.len());
        for r in &rays {
            check_dim(dim, r.len())?;
            prim.push(primitive_ray(&ray_to_rat(r))?);
        }
        for c in &cones {
            if c.iter().any(|&i| i >= prim.len()) {
                return Err(Error::InvalidArgument(
                    "cone refers to a missing ray".into(),
                ));
            }
        }
        let fan = Fan::canonical(dim, prim, cones);
        fan.validate()?;
        Ok(fan)
    }

    pub(crate) fn canonical(dim: usize, rays: Vec<Ray>, cones: Vec<Vec<usize>>) -> Self {
        let mut order: Vec<usize> = (0..rays.len()).collect();
        order.sort_by_key(|&i| ray_key(&rays[i]));
        let mut sorted_rays: Vec<Ray> = Vec::new();
        let mut remap = vec![0usize; rays.len()];
        for &i in &order {
            if let Some(j) = sorted_rays.iter().position(|r| *r == rays[i]) {
                remap[i] = j;
            } else {
                remap[i] = sorted_rays.len();
                sorted_rays.push(rays[i].clone());
            }
        }
        let mut new_cones: Vec<Vec<usize>> = cones
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c.into_iter().map(|i| remap[i]).collect();
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        new_cones.sort();
        new_cones.dedup();
        // Drop rays no cone uses.
        let used: BTreeSet<usize> = new_cones.iter().flatten().copied().collect();
        let keep: Vec<usize> = (0..sorted_rays.len())
            .filter(|i| used.contains(i))
            .collect();
        let mut pos = vec![usize::MAX; sorted_rays.len()];
        for (k, &i) in keep.iter().enumerate() {
            pos[i] = k;
        }
        let final_rays = keep.iter().map(|&i| sorted_rays[i].clone()).collect();
        let mut final_cones: Vec<Vec<usize>> = new_cones
            .into_iter()
            .map(|c| c.into_iter().map(|i| pos[i]).collect())
            .collect();
        final_cones.sort();
        Fan {
            dim,
            rays: final_rays,
            cones: final_cones,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.dim;
        if self.cones.is_empty() {
            return Err(Error::Empty("fan"));
        }
        if !self.is_simplicial() {
            return Err(Error::NonSimplicial);
        }
        // Every wall lies on the boundary of the orthant and in one cone, or
        // inside and in two cones on opposite sides.
        let mut walls: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
        for (ci, c) in self.cones.iter().enumerate() {
            for (k, &opp) in c.iter().enumerate() {
                let wall: Vec<usize> = c
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, &i)| i)
                    .collect();
                walls.entry(wall).or_default().push((ci, opp));
            }
        }
        for (wall, users) in &walls {
            let boundary = (0..n).any(|i| wall.iter().all(|&r| self.rays[r][i] == 0));
            let ok = if boundary {
                users.len() == 1
            } else if users.len() == 2 {
                let ineq = self.wall_normal(wall);
                let s1 = crate::rational::dot(&ineq, &ray_to_rat(&self.rays[users[0].1]));
                let s2 = crate::rational::dot(&ineq, &ray_to_rat(&self.rays[users[1].1]));
                (s1 > Rat::zero()) != (s2 > Rat::zero())
            } else {
                false
            };
            if !ok {
                return Err(Error::InvalidArgument(format!(
                    "fan is not a subdivision of the orthant near wall {wall:?}"
                )));
            }
        }
        // The normalized volumes must add up to that of the orthant simplex.
        let mut total = Rat::zero();
        for c in &self.cones {
            let mut vol = self.cone(c).multiplicity();
            for &r in c {
                vol /= Rat::from_integer(self.rays[r].iter().sum::<i64>().into());
            }
            total += vol;
        }
        if !total.is_one() {
            return Err(Error::InvalidArgument(
                "cones do not cover the orthant exactly".into(),
            ));
        }
        Ok(())
    }

    fn wall_normal(&self, wall: &[usize]) -> RatVec {
        let rows: Vec<RatVec> = wall.iter().map(|&i| ray_to_rat(&self.rays[i])).collect();
        crate::geometry::linalg::nullspace(&rows, self.dim)
            .into_iter()
            .next()
            .expect("wall spans a hyperplane")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn cone(&self, c: &[usize]) -> Cone {
        Cone::new(c.iter().map(|&i| self.rays[i].clone()).collect())
            .expect("fan cones are simplicial")
    }

    pub fn ray_index(&self, r: &[i64]) -> Option<usize> {
        self.rays.iter().position(|x| x == r)
    }

    pub fn is_simplicial(&self) -> bool {
        self.cones.iter().all(|c| {
            c.len() == self.dim
                && rank(
                    &c.iter()
                        .map(|&i| ray_to_rat(&self.rays[i]))
                        .collect::<Vec<_>>(),
                ) == self.dim
        })
    }

    pub fn is_smooth(&self) -> bool {
        self.is_simplicial() && self.cones.iter().all(|c| self.cone(c).is_smooth())
    }

    /// Indices of rays with all entries positive.
    pub fn interior_rays(&self) -> Vec<usize> {
        (0..self.rays.len())
            .filter(|&i| is_interior_ray(&self.rays[i]))
            .collect()
    }

    /// First maximal cone containing `w ≥ 0`, with the coordinates of `w`.
    pub fn locate(&self, w: &[Rat]) -> Result<(usize, RatVec)> {
        check_dim(self.dim, w.len())?;
        for (ci, c) in self.cones.iter().enumerate() {
            if let Some(coords) = self.cone(c).coordinates(w) {
                if coords.iter().all(|x| *x >= Rat::zero()) {
                    return Ok((ci, coords));
                }
            }
        }
        Err(Error::InvalidArgument(format!(
            "weight {w:?} is not in the support of the fan"
        )))
    }

    /// Whether every cone of `self` lies in some cone of `coarse`.
    pub fn refines(&self, coarse: &Fan) -> bool {
        self.dim == coarse.dim
            && self.cones.iter().all(|c| {
                coarse.cones.iter().any(|d| {
                    let dc = coarse.cone(d);
                    c.iter().all(|&r| dc.contains(&ray_to_rat(&self.rays[r])))
                })
            })
    }

    /// Star subdivision at a ray, in the relative interior of the smallest
    /// cone containing it.
    pub fn subdivide_at(&self, new_ray: &[i64]) -> Result<Fan> {
        let v = primitive_ray(&ray_to_rat(new_ray))?;
        let (ci, coords) = self.locate(&ray_to_rat(&v))?;
        let face: Vec<Ray> = self.cones[ci]
            .iter()
            .zip(&coords)
            .filter(|(_, x)| !x.is_zero())
            .map(|(&i, _)| self.rays[i].clone())
            .collect();
        star_subdivision(self, &Cone::new(face)?, &v)
    }
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fan[")?;
        for (k, c) in self.cones.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "<")?;
            for (j, &i) in c.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{:?}", self.rays[i])?;
            }
            write!(f, ">")?;
        }
        write!(f, "]")
    }
}

/// Stellar subdivision of `fan` at `new_ray`, which must lie in the relative
/// interior of the face `cone`.
pub fn star_subdivision(fan: &Fan, cone: &Cone, new_ray: &[i64]) -> Result<Fan> {
    check_dim(fan.dim, new_ray.len())?;
    let v = primitive_ray(&ray_to_rat(new_ray))?;
    let not_interior = || Error::RayNotInterior(v.clone());
    if fan.ray_index(&v).is_some() {
        return Err(not_interior());
    }
    let mut face = Vec::new();
    for r in cone.rays() {
        face.push(
            fan.ray_index(r).ok_or_else(|| {
                Error::InvalidArgument(format!("ray {r:?} is not a ray of the fan"))
            })?,
        );
    }
    if !cone.contains_in_relint(&ray_to_rat(&v)) {
        return Err(not_interior());
    }
    let containing: Vec<usize> = (0..fan.cones.len())
        .filter(|&ci| face.iter().all(|r| fan.cones[ci].contains(r)))
        .collect();
    if containing.is_empty() {
        return Err(Error::InvalidArgument(
            "cone is not a face of the fan".into(),
        ));
    }
    let mut rays = fan.rays.clone();
    rays.push(v);
    let new_index = rays.len() - 1;
    let mut cones = Vec::new();
    for (ci, c) in fan.cones.iter().enumerate() {
        if !containing.contains(&ci) {
            cones.push(c.clone());
            continue;
        }
        for &rho in &face {
            let mut d: Vec<usize> = c.iter().copied().filter(|&i| i != rho).collect();
            d.push(new_index);
            cones.push(d);
        }
    }
    Ok(Fan::canonical(fan.dim, rays, cones))
}

/// Triangulates full-dimensional polyhedral cones, given by H-descriptions
/// (orthant constraints added here), into a simplicial fan.
fn triangulate_cells(dim: usize, cells: &[Vec<RatVec>]) -> Result<Fan> {
    let mut rays: Vec<Ray> = Vec::new();
    let mut cones = Vec::new();
    for ineqs in cells {
        let mut all = ineqs.clone();
        for i in 0..dim {
            let mut e = vec![Rat::zero(); dim];
            e[i] = Rat::one();
            all.push(e);
        }
        let cell_rays = extreme_rays(&all, dim)?;
        let rats: Vec<RatVec> = cell_rays.iter().map(|r| ray_to_rat(r)).collect();
        if rank(&rats) < dim {
            continue;
        }
        for simplex in pulling_triangulation(&cell_rays, &all) {
            let idx = simplex
                .iter()
                .map(|&k| {
                    let r = &cell_rays[k];
                    match rays.iter().position(|x| x == r) {
                        Some(p) => p,
                        None => {
                            rays.push(r.clone());
                            rays.len() - 1
                        }
                    }
                })
                .collect();
            cones.push(idx);
        }
    }
    Ok(Fan::canonical(dim, rays, cones))
}

/// The coarsest simplicial fan (without new rays) refining both fans.
pub fn common_refinement(f1: &Fan, f2: &Fan) -> Result<Fan> {
    check_dim(f1.dim, f2.dim)?;
    let mut cells = Vec::new();
    for c1 in &f1.cones {
        let rays1: Vec<Ray> = c1.iter().map(|&i| f1.rays[i].clone()).collect();
        let h1 = simplicial_inequalities(&rays1).ok_or(Error::NonSimplicial)?;
        for c2 in &f2.cones {
            let rays2: Vec<Ray> = c2.iter().map(|&i| f2.rays[i].clone()).collect();
            let h2 = simplicial_inequalities(&rays2).ok_or(Error::NonSimplicial)?;
            cells.push(h1.iter().chain(&h2).cloned().collect());
        }
    }
    triangulate_cells(f1.dim, &cells)
}

/// A simplicial fan on which `−support_value(P_i, ·)` is linear on every
/// cone, for every region in the list. If it has no ray with all entries
/// positive it is subdivided at `(1, …, 1)`.
pub fn normal_fan_refinement(regions: &[NewtonRegion]) -> Result<Fan> {
    let Some(first) = regions.first() else {
        return Err(Error::Empty("region list"));
    };
    let n = first.dim();
    let mut sum = NewtonRegion::trivial(n);
    for p in regions {
        sum = sum.minkowski_sum(p)?;
    }
    let gens = sum.generators();
    let cells: Vec<Vec<RatVec>> = gens
        .iter()
        .map(|v| {
            gens.iter()
                .filter(|g| *g != v)
                .map(|g| crate::rational::sub_vec(g, v))
                .collect()
        })
        .collect();
    let mut fan = triangulate_cells(n, &cells)?;
    if fan.interior_rays().is_empty() && n > 1 {
        fan = fan.subdivide_at(&vec![1; n])?;
    }
    Ok(fan)
}

/// Fan whose interior rays are the given strictly positive vectors, obtained
/// by successive star subdivisions of the orthant.
pub fn fan_with_rays(n: usize, interior: &[Ray]) -> Result<Fan> {
    let mut fan = Fan::orthant(n);
    for r in interior {
        let p = primitive_ray(&ray_to_rat(r))?;
        if fan.ray_index(&p).is_none() {
            fan = fan.subdivide_at(&p)?;
        }
    }
    Ok(fan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_vec;

    fn region(gens: &[&[i64]]) -> NewtonRegion {
        NewtonRegion::from_points(&gens.iter().map(|g| rat_vec(g)).collect::<Vec<_>>()).unwrap()
    }

    fn interior(f: &Fan) -> Vec<Ray> {
        f.interior_rays()
            .iter()
            .map(|&i| f.rays()[i].clone())
            .collect()
    }

    #[test]
    fn star_subdivision_examples() {
        let o = Fan::orthant(2);
        let axis = Cone::new(o.rays().to_vec()).unwrap();
        let b = star_subdivision(&o, &axis, &[1, 1]).unwrap();
        assert_eq!(b.cones().len(), 2);
        assert_eq!(b.rays(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        b.validate().unwrap();
        let c = Cone::new(vec![vec![1, 1], vec![0, 1]]).unwrap();
        let b2 = star_subdivision(&b, &c, &[1, 2]).unwrap();
        assert_eq!(b2.cones().len(), 3);
        b2.validate().unwrap();
        assert!(b2.refines(&b));
        assert_eq!(
            star_subdivision(&b, &c, &[1, 1]),
            Err(Error::RayNotInterior(vec![1, 1]))
        );
        assert!(matches!(
            star_subdivision(&b, &c, &[2, 1]),
            Err(Error::RayNotInterior(_))
        ));
    }

    #[test]
    fn common_refinement_examples() {
        let o = Fan::orthant(2);
        let b = fan_with_rays(2, &[vec![1, 1]]).unwrap();
        assert_eq!(common_refinement(&b, &b).unwrap(), b);
        assert_eq!(common_refinement(&o, &b).unwrap(), b);
        let c = fan_with_rays(2, &[vec![1, 2]]).unwrap();
        let r = common_refinement(&b, &c).unwrap();
        assert_eq!(interior(&r), vec![vec![1, 1], vec![1, 2]]);
        r.validate().unwrap();
    }

    #[test]
    fn common_refinement_in_three_dimensions() {
        let a = fan_with_rays(3, &[vec![1, 1, 1]]).unwrap();
        let b = fan_with_rays(3, &[vec![1, 2, 3], vec![2, 1, 1]]).unwrap();
        let r = common_refinement(&a, &b).unwrap();
        r.validate().unwrap();
        assert!(r.refines(&a));
        assert!(r.refines(&b));
    }

    #[test]
    fn normal_fan_examples() {
        let m = region(&[&[1, 0], &[0, 1]]);
        let f = normal_fan_refinement(std::slice::from_ref(&m)).unwrap();
        assert_eq!(f, fan_with_rays(2, &[vec![1, 1]]).unwrap());
        let p = region(&[&[1, 0], &[0, 2]]);
        let f = normal_fan_refinement(std::slice::from_ref(&p)).unwrap();
        assert_eq!(interior(&f), vec![vec![2, 1]]);
        let f = normal_fan_refinement(&[m, p]).unwrap();
        assert_eq!(interior(&f), vec![vec![1, 1], vec![2, 1]]);
        f.validate().unwrap();
        let f = normal_fan_refinement(&[region(&[&[1, 1]])]).unwrap();
        assert_eq!(interior(&f), vec![vec![1, 1]]);
    }

    #[test]
    fn normal_fan_in_three_dimensions() {
        let p = region(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 1], &[1, 1, 0]]);
        let f = normal_fan_refinement(&[p]).unwrap();
        f.validate().unwrap();
        assert!(!f.interior_rays().is_empty());
    }

    #[test]
    fn validation_rejects_bad_fans() {
        // Overlapping cones.
        assert!(Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![1, 1]],
            vec![vec![0, 1], vec![0, 2]]
        )
        .is_err());
        // Missing piece.
        assert!(Fan::new(2, vec![vec![1, 0], vec![1, 1]], vec![vec![0, 1]]).is_err());
        assert!(Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![1, 1]],
            vec![vec![0, 2], vec![2, 1]]
        )
        .is_ok());
    }
}
