//! Newton regions: canonical form, support values, sums and covolumes.

use valuix::rational::{rat_vec, ratio, Rat};
use valuix::NewtonRegion;

fn main() -> valuix::Result<()> {
    let cusp = NewtonRegion::from_exponents(&[vec![2, 0], vec![0, 3]])?;
    let m = NewtonRegion::from_exponents(&[vec![1, 0], vec![0, 1]])?;
    println!("P(x^2, y^3) = {cusp}");
    for f in cusp.facets() {
        println!("  facet {} >= {}", show(&f.normal), f.offset);
    }

    let w = rat_vec(&[3, 2]);
    println!("support at {}: {}", show(&w), cusp.support_value(&w)?);

    let sum = cusp.minkowski_sum(&m)?;
    let hull = cusp.union_hull(&m)?;
    println!("P + P(m) = {sum}, support {}", sum.support_value(&w)?);
    println!("conv(P, P(m)) = {hull}");

    println!("covol P = {}", cusp.covolume()?);
    println!("covol (3/2)P = {}", cusp.scale(&ratio(3, 2))?.covolume()?);
    println!("P(m) contains P: {}", m.contains_region(&cusp));
    Ok(())
}

fn show(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}
