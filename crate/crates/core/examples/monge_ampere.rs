//! Monge-Ampere measures and generalized Lelong numbers.

use valuix::divisors::lelong_number;
use valuix::intersection::{generalized_lelong, monge_ampere};
use valuix::rational::ratio;
use valuix::{FormalPshToric, MonomialIdeal, PshGerm};

fn main() -> valuix::Result<()> {
    let a = MonomialIdeal::new(2, [vec![2, 0], vec![1, 1], vec![0, 4]])?;
    let mu = monge_ampere(&[FormalPshToric::from_ideal(&a)?])?;
    for (nu, mass) in mu.atoms() {
        println!("atom at {nu} with mass {mass}");
    }
    println!("total mass {}", mu.total_mass());

    let b = MonomialIdeal::new(3, [vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 3]])?;
    let c = MonomialIdeal::maximal_power(3, 2);
    let mu3 = monge_ampere(&[
        FormalPshToric::from_ideal(&b)?,
        FormalPshToric::from_ideal(&c)?,
    ])?;
    println!(
        "MA in three variables has {} atoms, mass {}",
        mu3.atoms().len(),
        mu3.total_mass()
    );

    let u = PshGerm::new(
        2,
        vec![(
            ratio(3, 2),
            MonomialIdeal::new(2, [vec![1, 0], vec![0, 3]])?,
        )],
    )?;
    let phi = PshGerm::log_ideal(a);
    println!("Lelong number of u: {}", lelong_number(&u)?);
    println!(
        "Lelong number of u against phi: {}",
        generalized_lelong(&u, &phi)?
    );
    Ok(())
}
