//! PL functions on a fan, the nef test and nef envelopes.

use valuix::multiplier::nef_envelope;
use valuix::rational::rat;
use valuix::toric::{fan_with_rays, pl_from_region, PLFunction};

fn main() -> valuix::Result<()> {
    let fan = fan_with_rays(2, &[vec![1, 1]])?;
    // rays in canonical order: e1, e2, (1, 1)
    let convex = PLFunction::new(fan.clone(), vec![rat(0), rat(0), rat(-3)])?;
    let concave = PLFunction::new(fan.clone(), vec![rat(-2), rat(-2), rat(0)])?;
    for h in [&convex, &concave] {
        let env = nef_envelope(h)?;
        let back = pl_from_region(env.region(), &fan)?;
        println!(
            "values {:?}: nef {}, envelope {} with values {:?}",
            h.values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            h.is_nef()?,
            env.region(),
            back.values()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
        );
    }
    Ok(())
}
