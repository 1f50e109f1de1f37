//! Monge-Ampère measures of toric formal psh functions as finite sums of
//! Dirac masses at divisorial valuations.

use num_traits::{One, Zero};

use crate::divisors::{transform, FormalPshToric, PshGerm};
use crate::error::{Error, Result};
use crate::geometry::linalg::{solve_system, Solution};
use crate::geometry::NewtonRegion;
use crate::intersection::mixed::mixed_multiplicity;
use crate::intersection::relative::extremal_weight_region;
use crate::rational::{Rat, RatVec};
use crate::toric::cone::ray_to_rat;
use crate::toric::{dual_complex, normal_fan_refinement, Fan};
use crate::valuation::MonomialValuation;

/// How many times the fan is subdivided before giving up on a singular
/// test system.
pub const MAX_SUBDIVISIONS: usize = 3;

/// `Σ mass_i δ_{ν_i}` with distinct normalized valuations and positive masses.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AtomicMeasure {
    atoms: Vec<(MonomialValuation, Rat)>,
}

impl AtomicMeasure {
    pub fn new(atoms: Vec<(MonomialValuation, Rat)>) -> Result<Self> {
        let mut merged: Vec<(MonomialValuation, Rat)> = Vec::new();
        for (nu, mass) in atoms {
            if mass < Rat::zero() {
                return Err(Error::NonPositive(format!("mass {mass} at {nu}")));
            }
            let nu = nu.normalize().0;
            match merged.iter_mut().find(|(v, _)| *v == nu) {
                Some((_, m)) => *m += mass,
                None => merged.push((nu, mass)),
            }
        }
        merged.retain(|(_, m)| !m.is_zero());
        merged.sort();
        Ok(AtomicMeasure { atoms: merged })
    }

    pub fn atoms(&self) -> &[(MonomialValuation, Rat)] {
        &self.atoms
    }

    pub fn total_mass(&self) -> Rat {
        self.atoms.iter().map(|(_, m)| m).sum()
    }

    /// `∫ g dμ = Σ mass·g(ν)`.
    pub fn integrate(&self, g: &FormalPshToric) -> Result<Rat> {
        let mut total = Rat::zero();
        for (nu, m) in &self.atoms {
            total += m * g.value(nu.weights())?;
        }
        Ok(total)
    }
}

/// Test functions for the mass system: `P(m)` and the extremal region of
/// each interior ray.
fn test_regions(n: usize, rays: &[RatVec]) -> Result<Vec<NewtonRegion>> {
    let mut out = vec![NewtonRegion::from_points(
        &crate::geometry::region::unit_vectors(n),
    )?];
    for e in rays {
        out.push(extremal_weight_region(e)?.into_region());
    }
    Ok(out)
}

fn solve_masses(fan: &Fan, regions: &[NewtonRegion]) -> Result<Option<AtomicMeasure>> {
    let n = fan.dim();
    let dual = dual_complex(fan)?;
    let atoms: Vec<MonomialValuation> = (0..dual.vertices().len())
        .map(|v| dual.vertex_valuation(v))
        .collect();
    let weights: Vec<RatVec> = atoms.iter().map(|a| a.weights().to_vec()).collect();
    let tests = test_regions(n, &weights)?;
    let mut rows = Vec::with_capacity(tests.len());
    let mut rhs = Vec::with_capacity(tests.len());
    for q in &tests {
        rows.push(weights.iter().map(|w| q.support(w)).collect::<RatVec>());
        let mut tuple = vec![q.clone()];
        tuple.extend(regions.iter().cloned());
        rhs.push(mixed_multiplicity(&tuple)?);
    }
    match solve_system(&rows, &rhs, weights.len()) {
        Solution::Unique(mu) => {
            if let Some(m) = mu.iter().find(|m| **m < Rat::zero()) {
                return Err(Error::Inconsistent(format!("negative mass {m}")));
            }
            Ok(Some(AtomicMeasure::new(
                atoms.into_iter().zip(mu).collect(),
            )?))
        }
        Solution::Underdetermined => Ok(None),
        Solution::Inconsistent => Err(Error::Inconsistent("mass system has no solution".into())),
    }
}

/// `MA(g_1, …, g_{n−1})` for primary-backed functions.
pub fn monge_ampere(gs: &[FormalPshToric]) -> Result<AtomicMeasure> {
    let n = gs.len() + 1;
    let regions: Vec<NewtonRegion> = gs.iter().map(|g| g.region().clone()).collect();
    for p in &regions {
        crate::rational::check_dim(n, p.dim())?;
        if !p.is_primary() {
            return Err(Error::NotPrimary(format!("region {p}")));
        }
    }
    if n == 1 {
        return AtomicMeasure::new(vec![(MonomialValuation::multiplicity(1), Rat::one())]);
    }
    let mut fan = normal_fan_refinement(&regions)?;
    for _ in 0..=MAX_SUBDIVISIONS {
        if let Some(mu) = solve_masses(&fan, &regions)? {
            return Ok(mu);
        }
        let cone = fan
            .cones()
            .iter()
            .find(|c| c.iter().all(|&i| fan.rays()[i].iter().all(|&x| x > 0)))
            .or_else(|| fan.cones().first())
            .expect("fan has cones")
            .clone();
        let mut bary = vec![0i64; n];
        for &i in &cone {
            for (b, r) in bary.iter_mut().zip(&fan.rays()[i]) {
                *b += r;
            }
        }
        fan = fan.subdivide_at(&bary)?;
    }
    Err(Error::SingularSystem(MAX_SUBDIVISIONS))
}

/// `ν_φ(u) = ∫ −û dMA(φ̂, …, φ̂)`.
pub fn generalized_lelong(u: &PshGerm, phi: &PshGerm) -> Result<Rat> {
    crate::rational::check_dim(u.dim(), phi.dim())?;
    let n = phi.dim();
    let ph = transform(phi)?;
    let mu = monge_ampere(&vec![ph; n - 1])?;
    Ok(-mu.integrate(&transform(u)?)?)
}

/// Weights of the rays of `fan`, for evaluating test functions.
pub fn ray_weights(fan: &Fan) -> Vec<RatVec> {
    fan.rays().iter().map(|r| ray_to_rat(r)).collect()
}
