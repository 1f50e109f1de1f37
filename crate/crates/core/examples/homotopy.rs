//! Deforming a valuation onto its monomial retraction.

use valuix::rational::{rat, ratio};
use valuix::valuation::{HomotopyProfile, Valuation};
use valuix::{Polynomial, ShiftedMonomialValuation, TriangularChange};

fn main() -> valuix::Result<()> {
    let change = TriangularChange::new(vec![
        Polynomial::zero(2),
        Polynomial::monomial(vec![2, 0], rat(1)),
    ])?;
    let nu = ShiftedMonomialValuation::new(change, vec![rat(1), rat(3)])?;
    let f = Polynomial::from_terms(2, [(vec![0, 1], rat(1)), (vec![2, 0], rat(-1))])?;

    let profile = HomotopyProfile::new(&nu, &f)?;
    println!(
        "nu(f) = {}, reached from s = {}",
        nu.eval_poly(&f)?,
        profile.threshold()
    );
    for s in [rat(0), ratio(1, 4), ratio(1, 2), rat(1), rat(2)] {
        println!("h_{s}(nu)(f) = {}", profile.eval(&s)?);
    }
    Ok(())
}
