//! Multiplier ideals `L²` and bounded ideals `L∞` of toric formal psh
//! functions, log canonical thresholds and jumping numbers.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::divisors::{FormalPshToric, MonomialIdeal};
use crate::error::{Error, Result};
use crate::geometry::NewtonRegion;
use crate::rational::{dot_int, floor_to_i64, ExtRat, Rat};

/// Componentwise bound on minimal generators of the lattice points of `c·P`
/// (`strict`: of the points `m` with `m + 1` in the interior).
pub fn generator_box(p: &NewtonRegion, c: &Rat, strict: bool) -> Result<Vec<u32>> {
    p.axis_intercepts()
        .iter()
        .map(|b| {
            let Some(b) = b else { return Ok(0) };
            let mut v = floor_to_i64(&(b * c))?;
            if !strict {
                v += 1;
            }
            u32::try_from(v.max(0)).map_err(|_| Error::Overflow)
        })
        .collect()
}

/// Least `m_n ≥ 0` such that `(prefix, m_n)` satisfies every facet of `c·P`,
/// or `None` if some facet not involving `x_n` fails on the prefix.
fn least_last(p: &NewtonRegion, c: &Rat, strict: bool, prefix: &[u32]) -> Result<Option<u32>> {
    let n = p.dim();
    let mut best = 0i64;
    for h in p.facets() {
        let a = &h.normal;
        let mut lhs = dot_int(&a[..n - 1], prefix);
        let mut rhs = &h.offset * c;
        if strict {
            lhs += a.iter().sum::<Rat>();
        }
        let an = &a[n - 1];
        if an.is_zero() {
            let ok = if strict { lhs > rhs } else { lhs >= rhs };
            if !ok {
                return Ok(None);
            }
            continue;
        }
        rhs -= lhs;
        let x = rhs / an;
        // strict: m_n > x;  otherwise m_n ≥ x
        let need = if strict {
            floor_to_i64(&x)? + 1
        } else {
            crate::rational::ceil_to_i64(&x)?
        };
        best = best.max(need);
    }
    Ok(Some(u32::try_from(best).map_err(|_| Error::Overflow)?))
}

/// Minimal generators of the lattice points of `c·P` (`strict`: of the `m`
/// with `m + 1` strictly inside `c·P`), scanning the box `bounds`.
pub fn lattice_ideal_in_box(
    p: &NewtonRegion,
    c: &Rat,
    strict: bool,
    bounds: &[u32],
) -> Result<MonomialIdeal> {
    let n = p.dim();
    let mut gens = Vec::new();
    let mut prefix = vec![0u32; n - 1];
    loop {
        if let Some(last) = least_last(p, c, strict, &prefix)? {
            let mut m = prefix.clone();
            m.push(last);
            gens.push(m);
        }
        let mut i = 0;
        loop {
            if i == n - 1 {
                return MonomialIdeal::new(n, gens);
            }
            if prefix[i] < bounds[i] {
                prefix[i] += 1;
                break;
            }
            prefix[i] = 0;
            i += 1;
        }
    }
}

fn lattice_ideal(p: &NewtonRegion, c: &Rat, strict: bool) -> Result<MonomialIdeal> {
    if p.is_trivial() {
        return Ok(MonomialIdeal::unit(p.dim()));
    }
    let bounds = generator_box(p, c, strict)?;
    lattice_ideal_in_box(p, c, strict, &bounds)
}

/// `L²(c·g)`: monomials `x^m` with `m + 1` in the interior of `c·P`.
pub fn l2_ideal_scaled(g: &FormalPshToric, c: &Rat) -> Result<MonomialIdeal> {
    lattice_ideal(g.region(), c, true)
}

/// `L∞(c·g)`: monomials `x^m` with `m ∈ c·P`.
pub fn linf_ideal_scaled(g: &FormalPshToric, c: &Rat) -> Result<MonomialIdeal> {
    lattice_ideal(g.region(), c, false)
}

pub fn l2_ideal(g: &FormalPshToric) -> Result<MonomialIdeal> {
    l2_ideal_scaled(g, &Rat::one())
}

pub fn linf_ideal(g: &FormalPshToric) -> Result<MonomialIdeal> {
    linf_ideal_scaled(g, &Rat::one())
}

/// `τ(m) = min_j ⟨a_j, m + 1⟩ / b_j`: `x^m ∈ L²(c·g)` iff `c < τ(m)`.
pub fn threshold(p: &NewtonRegion, m: &[u32]) -> ExtRat {
    p.facets()
        .iter()
        .map(|h| (dot_int(&h.normal, m) + h.normal.iter().sum::<Rat>()) / &h.offset)
        .min()
        .map_or(ExtRat::Infinity, ExtRat::Finite)
}

/// Log canonical threshold `τ(0)`; `+∞` for the zero function.
pub fn lct(g: &FormalPshToric) -> ExtRat {
    threshold(g.region(), &vec![0; g.dim()])
}

/// The multiplier ideals `L²(c·g)` for `0 < c ≤ c_max`: `ideals[0]` holds on
/// `(0, thresholds[0])`, and `ideals[i + 1]` on `[thresholds[i], thresholds[i + 1])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpingLadder {
    pub thresholds: Vec<Rat>,
    pub ideals: Vec<MonomialIdeal>,
}

impl JumpingLadder {
    /// `L²(c·g)` read off the ladder.
    pub fn ideal_at(&self, c: &Rat) -> &MonomialIdeal {
        let k = self.thresholds.iter().take_while(|t| *t <= c).count();
        &self.ideals[k]
    }
}

/// Jumping numbers of `g` up to `c_max` (default `n·lct`).
pub fn jumping_ladder(g: &FormalPshToric, c_max: Option<Rat>) -> Result<JumpingLadder> {
    let n = g.dim();
    let unit = MonomialIdeal::unit(n);
    let ExtRat::Finite(l) = lct(g) else {
        return Ok(JumpingLadder {
            thresholds: Vec::new(),
            ideals: vec![unit],
        });
    };
    let c_max = c_max.unwrap_or_else(|| &l * Rat::from_integer(n.into()));
    if c_max <= Rat::zero() {
        return Err(Error::NonPositive(format!("c_max {c_max}")));
    }
    let p = g.region();
    let bounds = generator_box(p, &c_max, true)?;
    let mut values = BTreeSet::new();
    let mut m = vec![0u32; n];
    loop {
        if let ExtRat::Finite(t) = threshold(p, &m) {
            if t <= c_max {
                values.insert(t);
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                let thresholds: Vec<Rat> = values.into_iter().collect();
                let mut ideals = vec![unit];
                for t in &thresholds {
                    ideals.push(l2_ideal_scaled(g, t)?);
                }
                return Ok(JumpingLadder { thresholds, ideals });
            }
            if m[i] < bounds[i] {
                m[i] += 1;
                break;
            }
            m[i] = 0;
            i += 1;
        }
    }
}
