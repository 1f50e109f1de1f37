//! Log canonical thresholds, multiplier ideals and jumping numbers.

use valuix::multiplier::{jumping_ladder, l2_ideal_scaled, lct, linf_ideal};
use valuix::rational::{rat, ratio};
use valuix::{FormalPshToric, MonomialIdeal};

fn main() -> valuix::Result<()> {
    let cusp = MonomialIdeal::new(2, [vec![2, 0], vec![0, 3]])?;
    let g = FormalPshToric::from_ideal(&cusp)?;
    println!("lct{cusp} = {}", lct(&g));
    println!("L-infinity ideal: {}", linf_ideal(&g)?);
    for c in [ratio(1, 2), ratio(5, 6), rat(1), ratio(3, 2)] {
        println!("L2({c} g) = {}", l2_ideal_scaled(&g, &c)?);
    }

    let ladder = jumping_ladder(&g, Some(rat(2)))?;
    let jumps: Vec<String> = ladder.thresholds.iter().map(|t| t.to_string()).collect();
    println!("jumping numbers up to 2: {}", jumps.join(", "));
    Ok(())
}
