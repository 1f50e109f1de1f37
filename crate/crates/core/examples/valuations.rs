//! Monomial and shifted monomial valuations on polynomials.

use valuix::rational::{rat, ratio};
use valuix::valuation::{monomial_retraction, Valuation};
use valuix::{MonomialValuation, Polynomial, ShiftedMonomialValuation, TriangularChange};

fn main() -> valuix::Result<()> {
    // f = y^2 - x^3
    let f = Polynomial::from_terms(2, [(vec![0, 2], rat(1)), (vec![3, 0], rat(-1))])?;

    let nu = MonomialValuation::new(vec![rat(2), rat(3)])?;
    println!("{nu}(f) = {}", nu.eval_poly(&f)?);
    println!(
        "thinness {}, Izumi constant {}",
        nu.thinness(),
        nu.izumi_constant()
    );
    let (normal, scale) = nu.normalize();
    println!("normalized {normal} (divided by {scale})");

    // Weights in the coordinates z = (x, y - x^2).
    let change = TriangularChange::new(vec![
        Polynomial::zero(2),
        Polynomial::monomial(vec![2, 0], rat(1)),
    ])?;
    let g = Polynomial::from_terms(2, [(vec![0, 1], rat(1)), (vec![2, 0], rat(-1))])?;
    let shifted = ShiftedMonomialValuation::new(change, vec![rat(1), ratio(7, 2)])?;
    println!("shifted valuation of y - x^2: {}", shifted.eval_poly(&g)?);
    println!("shifted valuation of f: {}", shifted.eval_poly(&f)?);
    println!("retraction: {}", monomial_retraction(&shifted)?);
    Ok(())
}
