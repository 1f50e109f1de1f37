//! Relative types and the comparison of two germs.

use valuix::intersection::{relative_type, theorem_a_check};
use valuix::rational::{rat, rat_vec, Rat};
use valuix::{MonomialIdeal, PshGerm};

fn main() -> valuix::Result<()> {
    let a = MonomialIdeal::new(2, [vec![2, 0], vec![0, 2]])?;
    // Same integral closure as (x^2, y^2).
    let b = MonomialIdeal::new(2, [vec![2, 0], vec![1, 1], vec![0, 2]])?;
    let c = MonomialIdeal::new(2, [vec![3, 0], vec![0, 1]])?;
    let (u, v, w) = (
        PshGerm::log_ideal(a),
        PshGerm::log_ideal(b),
        PshGerm::log_ideal(c),
    );

    for weight in [rat_vec(&[1, 1]), rat_vec(&[1, 3])] {
        println!(
            "relative type of u at {}: {}",
            show(&weight),
            relative_type(&u, &weight)?
        );
    }

    let phis = vec![PshGerm::log_ideal(MonomialIdeal::maximal_power(2, 1))];
    let weights = vec![vec![rat(1), rat(2)]];
    for (name, other) in [("v", &v), ("w", &w)] {
        let r = theorem_a_check(&u, other, &weights, &phis)?;
        println!(
            "u vs {name}: regions equal {}, multiplier ideals equal {}, relative types equal {}, Lelong equal {}, consistent {}",
            r.regions_equal, r.multiplier_equal, r.relative_types_equal, r.lelong_equal, r.consistent()
        );
    }
    Ok(())
}

fn show(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}
