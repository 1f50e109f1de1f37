//! Approximating a toric formal psh function by multiplier ideals.

use valuix::multiplier::{approx_check, decreasing_check, els_approx_check, tameness_constant};
use valuix::rational::{rat_vec, ratio, Rat};
use valuix::{FormalPshToric, MonomialIdeal};

fn main() -> valuix::Result<()> {
    let a = MonomialIdeal::new(2, [vec![3, 0], vec![1, 1], vec![0, 5]])?;
    let g = FormalPshToric::from_ideal(&a)?.scale(&ratio(2, 3))?;
    let samples = vec![rat_vec(&[1, 1]), rat_vec(&[1, 4]), rat_vec(&[3, 1])];

    for k in [1, 4, 16] {
        let r = approx_check(&g, k, &samples)?;
        println!(
            "k = {k}: L2(kg) = {}, sandwich holds {}",
            r.ideal,
            r.holds()
        );
    }

    let t = tameness_constant(&g, 1..=12)?;
    println!("tameness bound {}, observed {}", t.bound, t.empirical);

    let els = els_approx_check(&g, 10, &samples)?;
    println!(
        "k = 10: contained {}, sandwich {}, L2 stable from {:?} (guaranteed from {})",
        els.contained,
        els.sandwich_holds(),
        els.stable_from,
        els.guaranteed_from
    );

    let d = decreasing_check(&g, 5, &samples)?;
    for (w, row) in &d.values {
        let row: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        println!("h_k at {}: {}", show(w), row.join(" >= "));
    }
    Ok(())
}

fn show(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}
