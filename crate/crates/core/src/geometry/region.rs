//! Newton regions: rational convex regions `P = conv(generators) + Q^n_{≥0}`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::hull::{self, Halfspace};
use crate::geometry::polytope;
use crate::rational::{check_dim, dot, is_nonnegative, rat, Rat, RatVec};

/// A convex region of `Q^n_{≥0}` stable under adding the positive orthant,
/// kept in canonical form: its generators are exactly its vertices, sorted.
///
/// Read as a function on weights, the region is the toric formal psh function
/// `g_P(w) = -min_{m ∈ P} ⟨w, m⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NewtonRegion {
    dim: usize,
    generators: Vec<RatVec>,
    /// Facets with positive offset; with `m ≥ 0` they cut out the region.
    facets: Vec<Halfspace>,
}

pub(crate) fn unit_vectors(n: usize) -> Vec<RatVec> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect()
}

fn coordinate_halfspaces(n: usize) -> Vec<Halfspace> {
    unit_vectors(n)
        .into_iter()
        .map(|normal| Halfspace {
            normal,
            offset: Rat::zero(),
        })
        .collect()
}

fn dominates(p: &[Rat], q: &[Rat]) -> bool {
    p.iter().zip(q).all(|(a, b)| a >= b)
}

impl NewtonRegion {
    /// The whole orthant: the zero divisor.
    pub fn trivial(dim: usize) -> Self {
        NewtonRegion {
            dim,
            generators: vec![vec![Rat::zero(); dim]],
            facets: Vec::new(),
        }
    }

    /// Canonical region generated by a finite point set.
    pub fn from_points(points: &[RatVec]) -> Result<Self> {
        let first = points.first().ok_or(Error::Empty("region generators"))?;
        let dim = first.len();
        if dim == 0 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        for p in points {
            check_dim(dim, p.len())?;
            if !is_nonnegative(p) {
                return Err(Error::NegativeCoordinate("region generator"));
            }
        }
        if points.iter().any(|p| p.iter().all(Zero::is_zero)) {
            return Ok(Self::trivial(dim));
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let pruned: Vec<RatVec> = pts
            .iter()
            .filter(|p| !pts.iter().any(|q| q != *p && dominates(p, q)))
            .cloned()
            .collect();
        let all_facets = hull::facets(&pruned, &unit_vectors(dim), dim)?;
        let mut constraints = all_facets.clone();
        constraints.extend(coordinate_halfspaces(dim));
        let generators = hull::select_vertices(&pruned, &constraints, dim);
        let facets = all_facets
            .into_iter()
            .filter(|h| h.offset.is_positive())
            .collect();
        Ok(NewtonRegion {
            dim,
            generators,
            facets,
        })
    }

    /// Region generated by integer exponent vectors.
    pub fn from_exponents(exps: &[Vec<u32>]) -> Result<Self> {
        let pts: Vec<RatVec> = exps
            .iter()
            .map(|e| e.iter().map(|&x| rat(i64::from(x))).collect())
            .collect();
        Self::from_points(&pts)
    }

    /// `{m ≥ 0 : ⟨a_j, m⟩ ≥ b_j}` for halfspaces with nonnegative normals.
    pub fn from_halfspaces(dim: usize, halfspaces: &[Halfspace]) -> Result<Self> {
        let mut constraints = Vec::new();
        for h in halfspaces {
            check_dim(dim, h.normal.len())?;
            if !is_nonnegative(&h.normal) {
                return Err(Error::NegativeCoordinate("halfspace normal"));
            }
            if h.normal.iter().all(Zero::is_zero) {
                if h.offset.is_positive() {
                    return Err(Error::InvalidArgument("infeasible halfspace".into()));
                }
                continue;
            }
            constraints.push(h.clone());
        }
        constraints.extend(coordinate_halfspaces(dim));
        let vertices = hull::vertices_from_halfspaces(&constraints, dim);
        Self::from_points(&vertices)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[RatVec] {
        &self.generators
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn is_trivial(&self) -> bool {
        self.facets.is_empty()
    }

    /// Bounded complement, i.e. the region meets every coordinate axis.
    pub fn is_primary(&self) -> bool {
        (0..self.dim).all(|i| {
            self.generators
                .iter()
                .any(|g| g.iter().enumerate().all(|(j, x)| j == i || x.is_zero()))
        })
    }

    /// Unchecked `min_{m ∈ P} ⟨w, m⟩` for `w ≥ 0`.
    pub fn support(&self, w: &[Rat]) -> Rat {
        self.generators
            .iter()
            .map(|g| dot(w, g))
            .min()
            .expect("regions have at least one generator")
    }

    pub fn support_value(&self, w: &[Rat]) -> Result<Rat> {
        check_dim(self.dim, w.len())?;
        if !is_nonnegative(w) {
            return Err(Error::NegativeCoordinate("weight vector"));
        }
        Ok(self.support(w))
    }

    /// The function `g_P(w) = -support(P, w)`.
    pub fn psh_value(&self, w: &[Rat]) -> Result<Rat> {
        Ok(-self.support_value(w)?)
    }

    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        if self.is_trivial() {
            return Ok(other.clone());
        }
        if other.is_trivial() {
            return Ok(self.clone());
        }
        let pts: Vec<RatVec> = self
            .generators
            .iter()
            .flat_map(|a| {
                other
                    .generators
                    .iter()
                    .map(move |b| a.iter().zip(b).map(|(x, y)| x + y).collect())
            })
            .collect();
        Self::from_points(&pts)
    }

    /// Convex hull of the union; the region of an ideal sum.
    pub fn union_hull(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut pts = self.generators.clone();
        pts.extend(other.generators.iter().cloned());
        Self::from_points(&pts)
    }

    pub fn contains(&self, m: &[Rat], strict: bool) -> Result<bool> {
        check_dim(self.dim, m.len())?;
        if !is_nonnegative(m) {
            return Err(Error::NegativeCoordinate("point"));
        }
        Ok(self.contains_unchecked(m, strict))
    }

    pub(crate) fn contains_unchecked(&self, m: &[Rat], strict: bool) -> bool {
        self.facets.iter().all(|h| {
            let v = h.value(m);
            if strict {
                v > h.offset
            } else {
                v >= h.offset
            }
        })
    }

    pub fn contains_region(&self, other: &Self) -> bool {
        other
            .generators
            .iter()
            .all(|g| self.contains_unchecked(g, false))
    }

    pub fn scale(&self, c: &Rat) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::NonPositive(format!("scale factor {c}")));
        }
        Ok(NewtonRegion {
            dim: self.dim,
            generators: self
                .generators
                .iter()
                .map(|g| g.iter().map(|x| x * c).collect())
                .collect(),
            facets: self
                .facets
                .iter()
                .map(|h| Halfspace {
                    normal: h.normal.clone(),
                    offset: &h.offset * c,
                })
                .collect(),
        })
    }

    /// Volume of the bounded complement `Q^n_{≥0} \ P`.
    ///
    /// The complement is star-shaped from the origin, so it decomposes into
    /// pyramids with apex 0 over the compact facets.
    pub fn covolume(&self) -> Result<Rat> {
        if !self.is_primary() {
            return Err(Error::NotPrimary(format!(
                "region {self} has unbounded complement"
            )));
        }
        let n = Rat::from_integer(self.dim.into());
        let mut total = Rat::zero();
        for f in &self.facets {
            let on_facet: Vec<RatVec> = self
                .generators
                .iter()
                .filter(|g| f.is_tight(g))
                .cloned()
                .collect();
            let axis = hull::projection_axis(&f.normal);
            let base = if self.dim == 1 {
                Rat::one()
            } else {
                polytope::volume(&polytope::project_out(&on_facet, axis))?
            };
            total += &f.offset / &f.normal[axis] * base / &n;
        }
        Ok(total)
    }

    /// Largest axis intercept `b_j / a_{j,i}` over facets with `a_{j,i} > 0`,
    /// per axis; `None` when no facet involves the axis. Any minimal
    /// generator of a monomial ideal read off this region by facet
    /// inequalities has `m_i` bounded by it.
    pub fn axis_intercepts(&self) -> Vec<Option<Rat>> {
        (0..self.dim)
            .map(|i| {
                self.facets
                    .iter()
                    .filter(|h| h.normal[i].is_positive())
                    .map(|h| &h.offset / &h.normal[i])
                    .max()
            })
            .collect()
    }

    /// Largest coordinate among the generators.
    pub fn max_coordinate(&self) -> Rat {
        self.generators
            .iter()
            .flatten()
            .max()
            .cloned()
            .unwrap_or_else(Rat::zero)
    }
}

impl fmt::Display for NewtonRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{{")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "(")?;
            for (i, x) in g.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "}}")
    }
}
