//! Fans refining the orthant, their dual complexes and retractions.

use valuix::rational::{rat, ratio};
use valuix::toric::{dual_complex, fan_with_rays, normal_fan_refinement, retract_check};
use valuix::{MonomialValuation, NewtonRegion};

fn main() -> valuix::Result<()> {
    let fan = fan_with_rays(2, &[vec![1, 1], vec![1, 2]])?;
    println!("{fan}");
    println!("smooth: {}", fan.is_smooth());

    let d = dual_complex(&fan)?;
    for (v, e) in d.vertices().iter().enumerate() {
        println!(
            "vertex {e:?}, b = {}, valuation {}",
            d.b_values()[v],
            d.vertex_valuation(v)
        );
    }
    println!("maximal faces: {:?}", d.maximal_faces());

    let nu = MonomialValuation::new(vec![rat(1), ratio(3, 2)])?;
    println!("retraction of {nu}: {}", retract_check(&nu, &fan)?);

    let p = NewtonRegion::from_exponents(&[vec![3, 0], vec![1, 1], vec![0, 4]])?;
    let det = normal_fan_refinement(std::slice::from_ref(&p))?;
    println!("determination fan of {p}: {det}");
    Ok(())
}
