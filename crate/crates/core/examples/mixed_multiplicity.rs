//! Multiplicities, mixed multiplicities and intersection numbers.

use valuix::intersection::{
    intersection, mixed_multiplicity, mixed_multiplicity_inclusion_exclusion, multiplicity,
};
use valuix::MonomialIdeal;

fn main() -> valuix::Result<()> {
    let m = MonomialIdeal::maximal_power(3, 1).region()?;
    let a = MonomialIdeal::new(3, [vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 1]])?.region()?;
    let b = MonomialIdeal::new(
        3,
        [vec![1, 0, 0], vec![0, 2, 0], vec![0, 1, 1], vec![0, 0, 3]],
    )?
    .region()?;

    println!("e(m^1) = {}", multiplicity(&m)?);
    println!("e(a) = {}", multiplicity(&a)?);
    let tuple = [a.clone(), b.clone(), m.clone()];
    println!("e<a, b, m> = {}", mixed_multiplicity(&tuple)?);
    println!(
        "by inclusion-exclusion: {}",
        mixed_multiplicity_inclusion_exclusion(&tuple)?
    );
    println!("<Z(a), Z(b), Z(m)> = {}", intersection(&tuple)?.value);
    Ok(())
}
