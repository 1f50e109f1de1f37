//! Seeded random instances for the check suites and tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::divisors::{FormalPshToric, MonomialIdeal, PshGerm};
use crate::error::{Error, Result};
use crate::rational::{Rat, RatVec};
use crate::toric::{fan_with_rays, Fan, PLFunction};
use crate::valuation::{Polynomial, ShiftedMonomialValuation, TriangularChange};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// A positive rational `p/q` with `1 ≤ p ≤ max_num`, `1 ≤ q ≤ max_den`.
pub fn positive_rat(rng: &mut Rng64, max_num: i64, max_den: i64) -> Rat {
    ratio(rng.gen_range(1..=max_num), rng.gen_range(1..=max_den))
}

/// Monomial ideal with at most `max_gens` generators and exponents at most
/// `max_exp`; primary ideals contain a pure power of every variable.
pub fn ideal(
    rng: &mut Rng64,
    n: usize,
    max_gens: usize,
    max_exp: u32,
    primary: bool,
) -> MonomialIdeal {
    let mut gens = Vec::new();
    if primary {
        for i in 0..n {
            let mut g = vec![0; n];
            g[i] = rng.gen_range(1..=max_exp);
            gens.push(g);
        }
    }
    let extra = max_gens.saturating_sub(gens.len());
    let count = if gens.is_empty() {
        rng.gen_range(1..=extra.max(1))
    } else {
        rng.gen_range(0..=extra)
    };
    for _ in 0..count {
        let g: Vec<u32> = loop {
            let g: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
            if g.iter().any(|&x| x > 0) {
                break g;
            }
        };
        gens.push(g);
    }
    MonomialIdeal::new(n, gens).expect("dimensions agree")
}

/// Normalized weight `w` (min entry 1) with rational entries.
pub fn weight(rng: &mut Rng64, n: usize) -> RatVec {
    let raw: RatVec = (0..n).map(|_| positive_rat(rng, 12, 4)).collect();
    let m = raw.iter().min().expect("n > 0").clone();
    raw.iter().map(|x| x / &m).collect()
}

/// Primary region `c·P(a)` with small rational `c`.
pub fn primary_region(rng: &mut Rng64, n: usize, max_exp: u32) -> Result<FormalPshToric> {
    let a = ideal(rng, n, n + 2, max_exp, true);
    let c = [
        ratio(1, 1),
        ratio(1, 2),
        ratio(2, 3),
        ratio(3, 2),
        ratio(2, 1),
    ]
    .choose(rng)
    .expect("nonempty")
    .clone();
    FormalPshToric::from_ideal(&a)?.scale(&c)
}

/// Germ `Σ c_i log|a_i|` with one or two terms.
pub fn germ(rng: &mut Rng64, n: usize, max_exp: u32, primary: bool) -> Result<PshGerm> {
    let terms = rng.gen_range(1..=2);
    let mut out = Vec::new();
    for _ in 0..terms {
        let c = positive_rat(rng, 3, 2);
        let p = primary || rng.gen_bool(0.7);
        out.push((c, ideal(rng, n, n + 2, max_exp, p)));
    }
    PshGerm::new(n, out)
}

/// Same region, usually a different presentation: the vertex monomials of
/// the region of `a` plus a random subset of the lattice points of the
/// region inside the bounding box of the generators.
pub fn closure_variant(rng: &mut Rng64, a: &MonomialIdeal) -> Result<MonomialIdeal> {
    let n = a.dim();
    let region = a.region()?;
    let mut gens: Vec<Vec<u32>> = region
        .generators()
        .iter()
        .map(|v| {
            v.iter()
                .map(|x| u32::try_from(x.to_integer()).map_err(|_| Error::Overflow))
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<_>>()?;
    let bound: Vec<u32> = (0..n)
        .map(|i| a.generators().iter().map(|g| g[i]).max().unwrap_or(0))
        .collect();
    let mut m = vec![0u32; n];
    loop {
        let pt: RatVec = m.iter().map(|&x| Rat::from_integer(x.into())).collect();
        if region.contains(&pt, false)? && rng.gen_bool(0.3) {
            gens.push(m.clone());
        }
        let mut i = 0;
        while i < n && m[i] == bound[i] {
            m[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        m[i] += 1;
    }
    MonomialIdeal::new(n, gens)
}

/// Polynomial with up to `terms` terms of total degree at most `degree`.
pub fn polynomial(rng: &mut Rng64, n: usize, terms: usize, degree: u32) -> Polynomial {
    loop {
        let mut p = Polynomial::zero(n);
        for _ in 0..rng.gen_range(1..=terms) {
            let mut e = vec![0u32; n];
            let d = rng.gen_range(0..=degree);
            for _ in 0..d {
                e[rng.gen_range(0..n)] += 1;
            }
            let c = rng.gen_range(-3i64..=3);
            p.add_term(e, Rat::from_integer(c.into()));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// Shifted monomial valuation with random triangular change of degree ≤ 3.
pub fn shifted_valuation(rng: &mut Rng64, n: usize) -> Result<ShiftedMonomialValuation> {
    let mut shifts = vec![Polynomial::zero(n)];
    for i in 1..n {
        let mut p = Polynomial::zero(n);
        for _ in 0..rng.gen_range(0..=2) {
            let mut e = vec![0u32; n];
            let d = rng.gen_range(1..=3);
            for _ in 0..d {
                e[rng.gen_range(0..i)] += 1;
            }
            let c = rng.gen_range(-2i64..=2);
            p.add_term(e, Rat::from_integer(c.into()));
        }
        shifts.push(p);
    }
    let w: RatVec = (0..n).map(|_| positive_rat(rng, 6, 3)).collect();
    ShiftedMonomialValuation::new(TriangularChange::new(shifts)?, w)
}

/// A fan from one to three random interior rays.
pub fn fan(rng: &mut Rng64, n: usize, max_entry: i64) -> Result<Fan> {
    let rays: Vec<Vec<i64>> = (0..rng.gen_range(1..=3))
        .map(|_| (0..n).map(|_| rng.gen_range(1..=max_entry)).collect())
        .collect();
    fan_with_rays(n, &rays)
}

/// Nonpositive PL function on a random fan, negative on some interior ray.
pub fn pl_function(rng: &mut Rng64, n: usize) -> Result<PLFunction> {
    let f = fan(rng, n, 4)?;
    let values: RatVec = f
        .rays()
        .iter()
        .map(|r| {
            if r.iter().all(|&x| x > 0) {
                -Rat::from_integer(rng.gen_range(1i64..=6).into())
            } else {
                -Rat::from_integer(rng.gen_range(0i64..=2).into())
            }
        })
        .collect();
    PLFunction::new(f, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let a: Vec<_> = (0..5).map(|_| ideal(&mut rng(7), 3, 5, 6, true)).collect();
        let b: Vec<_> = (0..5).map(|_| ideal(&mut rng(7), 3, 5, 6, true)).collect();
        assert_eq!(a, b);
        let mut r = rng(3);
        for _ in 0..20 {
            assert!(ideal(&mut r, 2, 5, 6, true).is_primary());
            let w = weight(&mut r, 3);
            assert_eq!(w.iter().min().unwrap(), &Rat::from_integer(1.into()));
        }
    }

    #[test]
    fn closure_variant_keeps_region() {
        let mut r = rng(11);
        for _ in 0..20 {
            let a = ideal(&mut r, 2, 4, 6, true);
            let b = closure_variant(&mut r, &a).unwrap();
            assert_eq!(a.region().unwrap(), b.region().unwrap());
        }
    }
}
