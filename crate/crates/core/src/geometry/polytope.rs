//! Bounded polytopes, used as intermediates for exact volumes.

use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::geometry::{hull, linalg};
use crate::rational::{sub_vec, Rat, RatVec};

#[derive(Debug, Clone, PartialEq)]
pub struct BoundedPolytope {
    pub vertices: Vec<RatVec>,
}

impl BoundedPolytope {
    pub fn new(mut vertices: Vec<RatVec>) -> Self {
        vertices.sort();
        vertices.dedup();
        BoundedPolytope { vertices }
    }

    pub fn dim(&self) -> usize {
        self.vertices.first().map_or(0, Vec::len)
    }

    /// Euclidean volume in the ambient space (zero when not full-dimensional).
    pub fn volume(&self) -> Result<Rat> {
        volume(&self.vertices)
    }
}

/// Drops coordinate `axis` from each point.
pub(crate) fn project_out(points: &[RatVec], axis: usize) -> Vec<RatVec> {
    points
        .iter()
        .map(|p| {
            p.iter()
                .enumerate()
                .filter(|(i, _)| *i != axis)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

fn affine_rank(points: &[RatVec]) -> usize {
    let Some(base) = points.first() else {
        return 0;
    };
    let diffs: Vec<RatVec> = points[1..].iter().map(|p| sub_vec(p, base)).collect();
    linalg::rank(&diffs)
}

/// Volume of `conv(points)` by pyramids from the lexicographically smallest
/// vertex over every facet not containing it; each facet is measured after
/// projecting out one coordinate, which keeps everything rational.
pub fn volume(points: &[RatVec]) -> Result<Rat> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let Some(first) = pts.first() else {
        return Ok(Rat::zero());
    };
    let d = first.len();
    if d == 0 {
        return Ok(Rat::from_integer(1.into()));
    }
    if affine_rank(&pts) < d {
        return Ok(Rat::zero());
    }
    if d == 1 {
        let lo = pts.iter().map(|p| p[0].clone()).min().unwrap();
        let hi = pts.iter().map(|p| p[0].clone()).max().unwrap();
        return Ok(hi - lo);
    }
    let apex = pts[0].clone();
    let facets = hull::facets(&pts, &[], d)?;
    let mut total = Rat::zero();
    for f in &facets {
        let height = f.value(&apex) - &f.offset;
        if height.is_zero() {
            continue;
        }
        let on_facet: Vec<RatVec> = pts.iter().filter(|p| f.is_tight(p)).cloned().collect();
        let axis = hull::projection_axis(&f.normal);
        let base = volume(&project_out(&on_facet, axis))?;
        total += height.abs() / f.normal[axis].abs() * base / Rat::from_integer(d.into());
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_vec, ratio};

    #[test]
    fn simplex_volumes() {
        let tri = vec![rat_vec(&[0, 0]), rat_vec(&[2, 0]), rat_vec(&[0, 3])];
        assert_eq!(volume(&tri).unwrap(), rat(3));
        let tet = vec![
            rat_vec(&[0, 0, 0]),
            rat_vec(&[1, 0, 0]),
            rat_vec(&[0, 1, 0]),
            rat_vec(&[0, 0, 1]),
        ];
        assert_eq!(volume(&tet).unwrap(), ratio(1, 6));
    }

    #[test]
    fn cube_with_interior_points() {
        let mut pts = Vec::new();
        for x in 0..=2 {
            for y in 0..=2 {
                for z in 0..=2 {
                    pts.push(rat_vec(&[x, y, z]));
                }
            }
        }
        assert_eq!(BoundedPolytope::new(pts).volume().unwrap(), rat(8));
    }

    #[test]
    fn four_dimensional_simplex() {
        let mut pts = vec![rat_vec(&[0, 0, 0, 0])];
        for i in 0..4 {
            let mut v = rat_vec(&[0, 0, 0, 0]);
            v[i] = rat(2);
            pts.push(v);
        }
        assert_eq!(volume(&pts).unwrap(), ratio(16, 24));
    }
}
