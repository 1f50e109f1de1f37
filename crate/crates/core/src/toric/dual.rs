//! Dual complexes of toric models and retractions onto them.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{check_dim, Rat, RatVec};
use crate::toric::cone::{ray_to_rat, Cone, Ray};
use crate::toric::fan::Fan;
use crate::valuation::{MonomialValuation, Valuation};

/// The cones of a fan spanned by rays with all entries positive, sliced by
/// `Σ b_i t_i = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualComplex {
    /// Interior rays.
    vertices: Vec<Ray>,
    /// `b_e = min_i e_i` per vertex.
    b: Vec<i64>,
    /// Index sets into `vertices`, all dimensions, sorted.
    faces: Vec<Vec<usize>>,
}

impl DualComplex {
    pub fn vertices(&self) -> &[Ray] {
        &self.vertices
    }

    pub fn b_values(&self) -> &[i64] {
        &self.b
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Faces not contained in another face.
    pub fn maximal_faces(&self) -> Vec<Vec<usize>> {
        self.faces
            .iter()
            .filter(|f| {
                !self
                    .faces
                    .iter()
                    .any(|g| g.len() > f.len() && f.iter().all(|i| g.contains(i)))
            })
            .cloned()
            .collect()
    }

    /// The normalized divisorial valuation `ν_e / b_e` of a vertex.
    pub fn vertex_valuation(&self, v: usize) -> MonomialValuation {
        let b = Rat::from_integer(self.b[v].into());
        MonomialValuation::new(
            ray_to_rat(&self.vertices[v])
                .iter()
                .map(|x| x / &b)
                .collect(),
        )
        .expect("interior rays are positive")
    }

    /// Affine coordinates `t_i = b_i λ_i / Σ_j b_j λ_j` of `w = Σ λ_i e_i`
    /// in a face, or `None` if `w` is not in the face.
    pub fn affine_coordinates(&self, face: &[usize], w: &[Rat]) -> Option<RatVec> {
        let cone = Cone::new(face.iter().map(|&i| self.vertices[i].clone()).collect()).ok()?;
        let lambda = cone.coordinates(w)?;
        if lambda.iter().any(|x| *x < Rat::zero()) {
            return None;
        }
        let scaled: RatVec = lambda
            .iter()
            .zip(face)
            .map(|(l, &i)| l * Rat::from_integer(self.b[i].into()))
            .collect();
        let total: Rat = scaled.iter().sum();
        if total.is_zero() {
            return None;
        }
        Some(scaled.iter().map(|x| x / &total).collect())
    }

    /// Whether the weight `w` lies on the cone over the complex.
    pub fn contains(&self, w: &[Rat]) -> bool {
        self.maximal_faces()
            .iter()
            .any(|f| self.affine_coordinates(f, w).is_some())
    }
}

/// Dual complex of a simplicial fan; empty when the fan has no interior ray.
pub fn dual_complex(fan: &Fan) -> Result<DualComplex> {
    if !fan.is_simplicial() {
        return Err(Error::NonSimplicial);
    }
    let interior = fan.interior_rays();
    let vertices: Vec<Ray> = interior.iter().map(|&i| fan.rays()[i].clone()).collect();
    let b = vertices
        .iter()
        .map(|r| *r.iter().min().expect("rays are nonempty"))
        .collect();
    let mut faces = BTreeSet::new();
    for c in fan.cones() {
        let inside: Vec<usize> = c
            .iter()
            .filter_map(|i| interior.iter().position(|j| j == i))
            .collect();
        for mask in 1u64..(1u64 << inside.len()) {
            let f: Vec<usize> = (0..inside.len())
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| inside[k])
                .collect();
            faces.insert(f);
        }
    }
    let mut faces: Vec<Vec<usize>> = faces.into_iter().collect();
    faces.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    Ok(DualComplex { vertices, b, faces })
}

/// The toric retraction of `ν` onto the fan: locate the chart containing the
/// center of `ν` from the values of `ν` on the chart monomials, and return the
/// monomial valuation with those chart weights.
pub fn retract_check<V: Valuation + ?Sized>(nu: &V, fan: &Fan) -> Result<MonomialValuation> {
    check_dim(fan.dim(), nu.dim())?;
    let values = nu.coordinate_values()?;
    let (ci, chart_values) = fan.locate(&values)?;
    let cone = &fan.cones()[ci];
    let mut weights = vec![Rat::zero(); fan.dim()];
    for (&r, lambda) in cone.iter().zip(&chart_values) {
        for (w, e) in weights.iter_mut().zip(&fan.rays()[r]) {
            *w += lambda * Rat::from_integer((*e).into());
        }
    }
    MonomialValuation::new(weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_vec, ratio};
    use crate::toric::fan::fan_with_rays;
    use crate::valuation::{Polynomial, ShiftedMonomialValuation, TriangularChange};

    fn parabola(w: [i64; 2]) -> ShiftedMonomialValuation {
        let p2 = Polynomial::monomial(vec![2, 0], rat(1));
        let change = TriangularChange::new(vec![Polynomial::zero(2), p2]).unwrap();
        ShiftedMonomialValuation::new(change, rat_vec(&w)).unwrap()
    }

    #[test]
    fn dual_complex_examples() {
        let d = dual_complex(&fan_with_rays(2, &[vec![1, 1]]).unwrap()).unwrap();
        assert_eq!(d.vertices(), &[vec![1, 1]]);
        assert_eq!(d.b_values(), &[1]);
        assert_eq!(d.vertex_valuation(0), MonomialValuation::multiplicity(2));

        let d = dual_complex(&fan_with_rays(2, &[vec![1, 1], vec![1, 2]]).unwrap()).unwrap();
        assert_eq!(d.vertices().len(), 2);
        assert_eq!(d.b_values(), &[1, 1]);
        assert_eq!(d.maximal_faces(), vec![vec![0, 1]]);

        let d = dual_complex(&fan_with_rays(2, &[vec![3, 2]]).unwrap()).unwrap();
        assert_eq!(d.b_values(), &[2]);
        assert_eq!(d.vertex_valuation(0).weights(), &[ratio(3, 2), rat(1)]);

        assert!(dual_complex(&Fan::orthant(2)).unwrap().is_empty());
    }

    #[test]
    fn affine_coordinates_sum_to_one() {
        let d = dual_complex(&fan_with_rays(2, &[vec![1, 1], vec![1, 2]]).unwrap()).unwrap();
        let t = d.affine_coordinates(&[0, 1], &rat_vec(&[2, 3])).unwrap();
        assert_eq!(t.iter().sum::<Rat>(), rat(1));
        assert!(d.contains(&rat_vec(&[2, 3])));
        assert!(!d.contains(&rat_vec(&[3, 2])));
    }

    #[test]
    fn retraction_examples() {
        let fan = fan_with_rays(2, &[vec![1, 1]]).unwrap();
        assert_eq!(
            retract_check(&parabola([1, 3]), &fan).unwrap().weights(),
            &rat_vec(&[1, 2])[..]
        );
        assert_eq!(
            retract_check(&parabola([1, 1]), &fan).unwrap().weights(),
            &rat_vec(&[1, 1])[..]
        );
        let nu = MonomialValuation::new(vec![ratio(5, 2), rat(1)]).unwrap();
        let fan = fan_with_rays(2, &[vec![1, 1], vec![1, 3]]).unwrap();
        assert_eq!(retract_check(&nu, &fan).unwrap(), nu);
    }
}
