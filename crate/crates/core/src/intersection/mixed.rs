//! Multiplicities and mixed multiplicities of primary Newton regions.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::linalg::solve_unique;
use crate::geometry::NewtonRegion;
use crate::rational::Rat;

fn factorial(n: usize) -> Rat {
    (1..=n).fold(Rat::one(), |acc, k| acc * Rat::from_integer(k.into()))
}

fn require_primary(p: &NewtonRegion) -> Result<()> {
    if p.is_primary() {
        Ok(())
    } else {
        Err(Error::NotPrimary(format!("region {p}")))
    }
}

/// `e(P) = n!·covol(P)`.
pub fn multiplicity(p: &NewtonRegion) -> Result<Rat> {
    require_primary(p)?;
    Ok(factorial(p.dim()) * p.covolume()?)
}

/// `covol(Σ t_i P_i)` for nonnegative integer `t`.
fn combined_covolume(regions: &[NewtonRegion], t: &[u32]) -> Result<Rat> {
    let n = regions[0].dim();
    let mut sum = NewtonRegion::trivial(n);
    for (p, &ti) in regions.iter().zip(t) {
        if ti > 0 {
            sum = sum.minkowski_sum(&p.scale(&Rat::from_integer(ti.into()))?)?;
        }
    }
    sum.covolume()
}

/// Exponent vectors `α ∈ Z^n_{≥0}` with `|α| = d`.
pub(crate) fn compositions(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for a in (0..=left).rev() {
            cur[i] = a;
            rec(i + 1, left - a, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

fn check_tuple(regions: &[NewtonRegion]) -> Result<usize> {
    let Some(first) = regions.first() else {
        return Err(Error::Empty("region list"));
    };
    let n = first.dim();
    if regions.len() != n {
        return Err(Error::InvalidArgument(format!(
            "expected {n} regions, found {}",
            regions.len()
        )));
    }
    for p in regions {
        crate::rational::check_dim(n, p.dim())?;
        require_primary(p)?;
    }
    Ok(n)
}

/// `e⟨P_1, …, P_n⟩`: the coefficient of `t_1⋯t_n` in `covol(Σ t_i P_i)`,
/// found by interpolating the degree `n` form on `{t : |t| = n}`.
pub fn mixed_multiplicity(regions: &[NewtonRegion]) -> Result<Rat> {
    let n = check_tuple(regions)?;
    let d = n as u32;
    let monomials = compositions(n, d);
    let nodes = compositions(n, d);
    let mut rows = Vec::with_capacity(nodes.len());
    let mut rhs = Vec::with_capacity(nodes.len());
    for t in &nodes {
        rows.push(
            monomials
                .iter()
                .map(|a| {
                    t.iter().zip(a).fold(Rat::one(), |acc, (&ti, &ai)| {
                        acc * Rat::from_integer(ti.into()).pow(ai as i32)
                    })
                })
                .collect(),
        );
        rhs.push(combined_covolume(regions, t)?);
    }
    let coeffs = solve_unique(&rows, &rhs)
        .ok_or_else(|| Error::Inconsistent("interpolation nodes are not unisolvent".into()))?;
    let k = monomials
        .iter()
        .position(|a| a.iter().all(|&x| x == 1))
        .expect("the multilinear monomial is present");
    Ok(coeffs[k].clone())
}

/// `Σ_{S ≠ ∅} (−1)^{n−|S|} covol(Σ_{i∈S} P_i)`, equal to [`mixed_multiplicity`].
pub fn mixed_multiplicity_inclusion_exclusion(regions: &[NewtonRegion]) -> Result<Rat> {
    let n = check_tuple(regions)?;
    let mut total = Rat::zero();
    for mask in 1u32..(1 << n) {
        let t: Vec<u32> = (0..n).map(|i| mask >> i & 1).collect();
        let v = combined_covolume(regions, &t)?;
        if (n as u32 - mask.count_ones()).is_multiple_of(2) {
            total += v;
        } else {
            total -= v;
        }
    }
    Ok(total)
}

/// `⟨Z_1, …, Z_n⟩ = −e⟨P_1, …, P_n⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionNumber {
    pub value: Rat,
}

pub fn intersection(regions: &[NewtonRegion]) -> Result<IntersectionNumber> {
    Ok(IntersectionNumber {
        value: -mixed_multiplicity(regions)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_vec, ratio};

    fn region(gens: &[&[i64]]) -> NewtonRegion {
        NewtonRegion::from_points(&gens.iter().map(|g| rat_vec(g)).collect::<Vec<_>>()).unwrap()
    }

    fn m(n: usize) -> NewtonRegion {
        NewtonRegion::from_points(&crate::geometry::region::unit_vectors(n)).unwrap()
    }

    #[test]
    fn multiplicity_examples() {
        for n in 1..=4 {
            assert_eq!(multiplicity(&m(n)).unwrap(), rat(1));
        }
        assert_eq!(multiplicity(&region(&[&[2, 0], &[0, 3]])).unwrap(), rat(6));
        assert_eq!(multiplicity(&region(&[&[1, 0], &[0, 2]])).unwrap(), rat(2));
        assert!(matches!(
            multiplicity(&region(&[&[1, 1]])),
            Err(Error::NotPrimary(_))
        ));
        let p = region(&[&[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(
            multiplicity(&p.scale(&ratio(3, 2)).unwrap()).unwrap(),
            ratio(9, 4) * multiplicity(&p).unwrap()
        );
    }

    #[test]
    fn mixed_multiplicity_examples() {
        let a = region(&[&[1, 0], &[0, 2]]);
        assert_eq!(mixed_multiplicity(&[a.clone(), m(2)]).unwrap(), rat(1));
        let b = region(&[&[2, 0], &[0, 3]]);
        let c = region(&[&[3, 0], &[0, 2]]);
        assert_eq!(mixed_multiplicity(&[b.clone(), c.clone()]).unwrap(), rat(4));
        assert_eq!(
            mixed_multiplicity_inclusion_exclusion(&[b, c]).unwrap(),
            rat(4)
        );
        for n in 1..=3 {
            assert_eq!(mixed_multiplicity(&vec![m(n); n]).unwrap(), rat(1));
        }
        assert_eq!(intersection(&[a.clone(), a]).unwrap().value, rat(-2));
    }

    #[test]
    fn mixed_multiplicity_three_dimensional() {
        let p = region(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]);
        let q = region(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        let r = m(3);
        let e = mixed_multiplicity(&[p.clone(), q.clone(), r.clone()]).unwrap();
        assert_eq!(
            e,
            mixed_multiplicity_inclusion_exclusion(&[p.clone(), q, r]).unwrap()
        );
        assert_eq!(
            mixed_multiplicity(&[p.clone(), p.clone(), p.clone()]).unwrap(),
            rat(30)
        );
    }
}
