//! Facet enumeration for full-dimensional polyhedra `conv(points) + cone(directions)`
//! and vertex enumeration for intersections of halfspaces.
//!
//! The envelope is small dimension (n ≤ 4) with at most a few dozen input
//! points, so candidate hyperplanes are enumerated from subsets of the input
//! and checked exactly. Arithmetic runs on integer-scaled coordinates in
//! `i128` with overflow detection.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geometry::linalg;
use crate::rational::{common_denominator, dot, Rat, RatVec};

/// Closed halfspace `⟨normal, x⟩ ≥ offset` with a primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: RatVec,
    pub offset: Rat,
}

impl Halfspace {
    pub fn value(&self, x: &[Rat]) -> Rat {
        dot(&self.normal, x)
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.value(x) >= self.offset
    }

    pub fn is_tight(&self, x: &[Rat]) -> bool {
        self.value(x) == self.offset
    }
}

fn to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128().ok_or(Error::Overflow)
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

fn idot(a: &[i128], b: &[i128]) -> Result<i128> {
    let mut s = 0i128;
    for (x, y) in a.iter().zip(b) {
        s = add(s, mul(*x, *y)?)?;
    }
    Ok(s)
}

fn gcd_all(v: &[i128]) -> i128 {
    v.iter().fold(0i128, |g, &x| g.gcd(&x))
}

/// Fraction-free (Bareiss) determinant.
fn idet(mut m: Vec<Vec<i128>>) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return Ok(0);
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = sub(mul(m[i][j], m[k][k])?, mul(m[i][k], m[k][j])?)?;
                m[i][j] = t / prev;
            }
        }
        prev = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}

/// Vector orthogonal to the `d - 1` given vectors in `Z^d` (generalized
/// cross product); zero when they are dependent.
fn cross(vectors: &[Vec<i128>], d: usize) -> Result<Vec<i128>> {
    let mut out = Vec::with_capacity(d);
    for j in 0..d {
        let minor: Vec<Vec<i128>> = vectors
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| *x)
                    .collect()
            })
            .collect();
        let det = idet(minor)?;
        out.push(if j % 2 == 0 { det } else { -det });
    }
    Ok(out)
}

/// Integer scaling of a point set by the lcm of all denominators.
fn scale_points(points: &[RatVec]) -> Result<(BigInt, Vec<Vec<i128>>)> {
    let all: Vec<Rat> = points.iter().flatten().cloned().collect();
    let den = common_denominator(&all);
    let scaled = points
        .iter()
        .map(|p| {
            p.iter()
                .map(|x| to_i128(&(x * Rat::from_integer(den.clone())).to_integer()))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((den, scaled))
}

fn primitive_direction(v: &RatVec) -> Result<Vec<i128>> {
    crate::rational::primitive_integer(v)
        .iter()
        .map(to_i128)
        .collect()
}

struct Combinations {
    n: usize,
    idx: Vec<usize>,
    first: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            first: true,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let k = self.idx.len();
        if k > self.n {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(self.idx.clone());
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(self.idx.clone());
            }
        }
        None
    }
}

pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    Combinations::new(n, k)
}

/// Facets of the full-dimensional polyhedron `conv(points) + cone(directions)`
/// in `Q^dim`, sorted. Returns an empty list when the polyhedron is not
/// full-dimensional.
pub fn facets(points: &[RatVec], directions: &[RatVec], dim: usize) -> Result<Vec<Halfspace>> {
    if points.is_empty() {
        return Err(Error::Empty("point set"));
    }
    let (den, pts) = scale_points(points)?;
    let dirs: Vec<Vec<i128>> = directions
        .iter()
        .map(primitive_direction)
        .collect::<Result<_>>()?;
    let np = pts.len();
    let items = np + dirs.len();
    let mut seen: BTreeSet<(Vec<i128>, i128)> = BTreeSet::new();
    if dim == 1 {
        // Halfline or segment: handled directly.
        let lo = pts.iter().map(|p| p[0]).min().unwrap();
        let hi = pts.iter().map(|p| p[0]).max().unwrap();
        let unbounded_up = dirs.iter().any(|d| d[0] > 0);
        let unbounded_down = dirs.iter().any(|d| d[0] < 0);
        if !unbounded_down {
            seen.insert((vec![1], lo));
        }
        if !unbounded_up {
            seen.insert((vec![-1], -hi));
        }
        if lo == hi && dirs.is_empty() {
            seen.clear();
        }
    } else {
        for combo in combinations(items, dim) {
            // The first chosen item must be a point.
            if combo[0] >= np {
                break;
            }
            let base = &pts[combo[0]];
            let mut vectors = Vec::with_capacity(dim - 1);
            for &c in &combo[1..] {
                if c < np {
                    vectors.push(
                        pts[c]
                            .iter()
                            .zip(base)
                            .map(|(a, b)| sub(*a, *b))
                            .collect::<Result<Vec<_>>>()?,
                    );
                } else {
                    vectors.push(dirs[c - np].clone());
                }
            }
            let mut normal = cross(&vectors, dim)?;
            let g = gcd_all(&normal);
            if g == 0 {
                continue;
            }
            for x in normal.iter_mut() {
                *x /= g;
            }
            let base_val = idot(&normal, base)?;
            let mut sign = 0i128;
            let mut valid = true;
            for d in &dirs {
                let s = idot(&normal, d)?;
                if s != 0 {
                    if sign == 0 {
                        sign = s.signum();
                    } else if s.signum() != sign {
                        valid = false;
                        break;
                    }
                }
            }
            if !valid {
                continue;
            }
            for p in &pts {
                let s = sub(idot(&normal, p)?, base_val)?;
                if s != 0 {
                    if sign == 0 {
                        sign = s.signum();
                    } else if s.signum() != sign {
                        valid = false;
                        break;
                    }
                }
            }
            if !valid || sign == 0 {
                continue;
            }
            if sign < 0 {
                for x in normal.iter_mut() {
                    *x = -*x;
                }
            }
            let off = idot(&normal, base)?;
            seen.insert((normal, off));
        }
    }
    let den_rat = Rat::from_integer(den);
    let mut out: Vec<Halfspace> = seen
        .into_iter()
        .map(|(normal, off)| Halfspace {
            normal: normal
                .into_iter()
                .map(|x| Rat::from_integer(BigInt::from(x)))
                .collect(),
            offset: Rat::from_integer(BigInt::from(off)) / &den_rat,
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Points among `candidates` that are vertices of the polyhedron cut out by
/// `constraints` (tight constraints of full rank).
pub fn select_vertices(
    candidates: &[RatVec],
    constraints: &[Halfspace],
    dim: usize,
) -> Vec<RatVec> {
    candidates
        .iter()
        .filter(|p| {
            let tight: Vec<RatVec> = constraints
                .iter()
                .filter(|h| h.is_tight(p))
                .map(|h| h.normal.clone())
                .collect();
            linalg::rank(&tight) == dim
        })
        .cloned()
        .collect()
}

/// Vertices of the polyhedron `{x : ⟨a_j, x⟩ ≥ b_j}`; assumed pointed.
pub fn vertices_from_halfspaces(constraints: &[Halfspace], dim: usize) -> Vec<RatVec> {
    let mut found: BTreeSet<RatVec> = BTreeSet::new();
    for combo in combinations(constraints.len(), dim) {
        let a: Vec<RatVec> = combo
            .iter()
            .map(|&i| constraints[i].normal.clone())
            .collect();
        let b: Vec<Rat> = combo
            .iter()
            .map(|&i| constraints[i].offset.clone())
            .collect();
        let Some(x) = linalg::solve_unique(&a, &b) else {
            continue;
        };
        if constraints.iter().all(|h| h.contains(&x)) {
            found.insert(x);
        }
    }
    found.into_iter().collect()
}

/// Index of a coordinate along which a hyperplane with this normal projects
/// injectively (largest absolute entry, first on ties).
pub(crate) fn projection_axis(normal: &[Rat]) -> usize {
    let mut best = 0;
    for (i, x) in normal.iter().enumerate() {
        if x.abs() > normal[best].abs() {
            best = i;
        }
    }
    debug_assert!(!normal[best].is_zero());
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_vec};

    fn orthant(n: usize) -> Vec<RatVec> {
        (0..n)
            .map(|i| (0..n).map(|j| rat(i64::from(i == j))).collect())
            .collect()
    }

    #[test]
    fn segment_plus_orthant() {
        let pts = vec![rat_vec(&[2, 0]), rat_vec(&[0, 3])];
        let f = facets(&pts, &orthant(2), 2).unwrap();
        // m1 ≥ 0, m2 ≥ 0 and 3 m1 + 2 m2 ≥ 6
        assert_eq!(f.len(), 3);
        assert!(f.contains(&Halfspace {
            normal: rat_vec(&[3, 2]),
            offset: rat(6)
        }));
    }

    #[test]
    fn unit_square() {
        let pts = vec![
            rat_vec(&[0, 0]),
            rat_vec(&[1, 0]),
            rat_vec(&[0, 1]),
            rat_vec(&[1, 1]),
        ];
        let f = facets(&pts, &[], 2).unwrap();
        assert_eq!(f.len(), 4);
        let v = vertices_from_halfspaces(&f, 2);
        assert_eq!(v.len(), 4);
    }

    #[test]
    fn degenerate_input_has_no_facets() {
        let pts = vec![rat_vec(&[0, 0]), rat_vec(&[1, 1]), rat_vec(&[2, 2])];
        assert!(facets(&pts, &[], 2).unwrap().is_empty());
    }

    #[test]
    fn bareiss_determinant() {
        let m = vec![vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]];
        assert_eq!(idet(m).unwrap(), 2 + (1 - 3));
    }

    #[test]
    fn combination_count() {
        assert_eq!(combinations(5, 3).count(), 10);
        assert_eq!(combinations(2, 3).count(), 0);
    }
}
