//! Piecewise linear functions on fans.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::linalg::solve_unique;
use crate::geometry::NewtonRegion;
use crate::rational::{check_dim, dot, Rat, RatVec};
use crate::toric::cone::ray_to_rat;
use crate::toric::fan::Fan;

/// A function on the orthant, linear on each cone of `fan`, given by its
/// values on the rays.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PLFunction {
    fan: Fan,
    values: RatVec,
}

impl PLFunction {
    pub fn new(fan: Fan, values: RatVec) -> Result<Self> {
        check_dim(fan.rays().len(), values.len())?;
        Ok(PLFunction { fan, values })
    }

    pub fn zero(fan: Fan) -> Self {
        let values = vec![Rat::zero(); fan.rays().len()];
        PLFunction { fan, values }
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    /// The linear functional agreeing with the ray values on a maximal cone.
    pub fn linear_piece(&self, cone: usize) -> Result<RatVec> {
        let c = &self.fan.cones()[cone];
        if c.len() != self.fan.dim() {
            return Err(Error::NonSimplicial);
        }
        let rows: Vec<RatVec> = c.iter().map(|&i| ray_to_rat(&self.fan.rays()[i])).collect();
        let rhs: RatVec = c.iter().map(|&i| self.values[i].clone()).collect();
        solve_unique(&rows, &rhs).ok_or(Error::NonSimplicial)
    }

    pub fn eval(&self, w: &[Rat]) -> Result<Rat> {
        let (ci, coords) = self.fan.locate(w)?;
        Ok(self.fan.cones()[ci]
            .iter()
            .zip(&coords)
            .map(|(&i, c)| c * &self.values[i])
            .sum())
    }

    /// Nonpositive on rays and convex across every interior wall.
    pub fn is_nef(&self) -> Result<bool> {
        if !self.fan.is_simplicial() {
            return Err(Error::NonSimplicial);
        }
        if self.values.iter().any(|v| *v > Rat::zero()) {
            return Ok(false);
        }
        let cones = self.fan.cones();
        let pieces: Vec<RatVec> = (0..cones.len())
            .map(|c| self.linear_piece(c))
            .collect::<Result<_>>()?;
        for (a, ca) in cones.iter().enumerate() {
            for (b, cb) in cones.iter().enumerate() {
                if a == b {
                    continue;
                }
                let shared = ca.iter().filter(|i| cb.contains(i)).count();
                if shared + 1 != self.fan.dim() {
                    continue;
                }
                let opposite = *cb.iter().find(|i| !ca.contains(i)).expect("walls differ");
                let r = ray_to_rat(&self.fan.rays()[opposite]);
                if dot(&pieces[a], &r) > self.values[opposite] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `conv(−ℓ_σ) + R^n_{≥0}` over the linear pieces `ℓ_σ`; for a nef
    /// function its values on the orthant are `−support_value` of this region.
    pub fn region(&self) -> Result<NewtonRegion> {
        let mut pts = Vec::new();
        for c in 0..self.fan.cones().len() {
            let l = self.linear_piece(c)?;
            pts.push(l.iter().map(|x| -x).collect::<RatVec>());
        }
        if pts.iter().any(|p| p.iter().any(|x| *x < Rat::zero())) {
            return Err(Error::InvalidArgument(
                "PL function has a linear piece that is positive on the orthant".into(),
            ));
        }
        NewtonRegion::from_points(&pts)
    }
}

/// The incarnation of `g_P = −support_value(P, ·)` on `fan`: its ray values,
/// interpolated linearly on each cone.
pub fn pl_from_region(p: &NewtonRegion, fan: &Fan) -> Result<PLFunction> {
    check_dim(fan.dim(), p.dim())?;
    let values = fan
        .rays()
        .iter()
        .map(|r| -p.support(&ray_to_rat(r)))
        .collect();
    PLFunction::new(fan.clone(), values)
}
