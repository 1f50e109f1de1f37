//! Nef envelopes of PL functions.

use num_traits::Zero;

use crate::divisors::FormalPshToric;
use crate::error::{Error, Result};
use crate::geometry::{Halfspace, NewtonRegion};
use crate::toric::cone::ray_to_rat;
use crate::toric::PLFunction;

/// The largest toric formal psh function bounded above by `h` on the rays:
/// region `{m ≥ 0 : ⟨e, m⟩ ≥ −h(e)}` over the rays `e` of the fan.
pub fn nef_envelope(h: &PLFunction) -> Result<FormalPshToric> {
    let fan = h.fan();
    let mut halfspaces = Vec::new();
    for (r, v) in fan.rays().iter().zip(h.values()) {
        if *v > crate::rational::Rat::zero() {
            return Err(Error::InvalidArgument(format!(
                "positive value {v} on ray {r:?}"
            )));
        }
        if !v.is_zero() {
            halfspaces.push(Halfspace {
                normal: ray_to_rat(r),
                offset: -v.clone(),
            });
        }
    }
    if halfspaces.is_empty() {
        return Ok(FormalPshToric::zero(fan.dim()));
    }
    Ok(FormalPshToric::new(NewtonRegion::from_halfspaces(
        fan.dim(),
        &halfspaces,
    )?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_vec};
    use crate::toric::{fan_with_rays, normal_fan_refinement, pl_from_region};

    fn region(gens: &[&[i64]]) -> NewtonRegion {
        NewtonRegion::from_points(&gens.iter().map(|g| rat_vec(g)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn envelope_examples() {
        let fan = fan_with_rays(2, &[vec![1, 1]]).unwrap();
        // rays are ordered e1, e2, (1,1)
        let h = PLFunction::new(fan.clone(), rat_vec(&[-1, -1, -3])).unwrap();
        let g = nef_envelope(&h).unwrap();
        assert_eq!(g.region(), &region(&[&[1, 2], &[2, 1]]));
        assert_eq!(g.value(&rat_vec(&[1, 1])).unwrap(), rat(-3));

        let h = PLFunction::new(fan.clone(), rat_vec(&[0, 0, -1])).unwrap();
        assert_eq!(
            nef_envelope(&h).unwrap().region(),
            &region(&[&[1, 0], &[0, 1]])
        );

        let p = region(&[&[4, 0], &[1, 1], &[0, 3]]);
        let f = normal_fan_refinement(std::slice::from_ref(&p)).unwrap();
        let h = pl_from_region(&p, &f).unwrap();
        assert_eq!(nef_envelope(&h).unwrap().region(), &p);

        let h = PLFunction::new(fan, rat_vec(&[1, 0, -1])).unwrap();
        assert!(nef_envelope(&h).is_err());
    }
}
