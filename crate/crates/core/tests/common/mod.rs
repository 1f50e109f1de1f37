//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use num_integer::Integer;
use rand::Rng;
use valuix::rational::{Rat, RatVec};
use valuix::sampling;
use valuix::{MonomialIdeal, NewtonRegion};

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(gens[0].len(), gens.iter().map(|g| g.to_vec())).unwrap()
}

// ---------------------------------------------------------------------------
// Generic forms modulo a prime.

const P: u64 = 2_147_483_647;

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, P - 2)
}

/// Monomials of total degree `< d`, graded then lexicographic.
fn monomials_below(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for deg in 0..d {
        let mut cur = vec![0u32; n];
        fill(&mut cur, 0, deg, &mut out);
    }
    out
}

fn fill(cur: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Vec<u32>>) {
    if i + 1 == cur.len() {
        cur[i] = left;
        out.push(cur.clone());
        return;
    }
    for k in (0..=left).rev() {
        cur[i] = k;
        fill(cur, i + 1, left - k, out);
    }
    cur[i] = 0;
}

type SparsePoly = Vec<(Vec<u32>, u64)>;

/// `dim_k k[x]/(I + m^d)` for every `d ≤ d_max`, where `I` is generated by
/// `forms`. Row echelon form with columns in increasing degree, so the
/// pivots of degree `< d` count the rank of the image in `k[x]/m^d`.
fn quotient_dims(n: usize, forms: &[SparsePoly], d_max: u32) -> Vec<usize> {
    let monos = monomials_below(n, d_max);
    let index: HashMap<&[u32], usize> = monos
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();
    let cols = monos.len();
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; cols];
    for f in forms {
        for beta in &monos {
            let mut row = vec![0u64; cols];
            let mut lead = cols;
            for (e, c) in f {
                let m: Vec<u32> = e.iter().zip(beta).map(|(a, b)| a + b).collect();
                if let Some(&j) = index.get(m.as_slice()) {
                    row[j] = (row[j] + c) % P;
                    lead = lead.min(j);
                }
            }
            if lead == cols {
                continue;
            }
            let mut j = lead;
            while j < cols {
                if row[j] == 0 {
                    j += 1;
                    continue;
                }
                match &pivots[j] {
                    Some(p) => {
                        let f = row[j];
                        for (k, v) in p.iter().enumerate().skip(j) {
                            if *v != 0 {
                                row[k] = (row[k] + P - f * v % P) % P;
                            }
                        }
                        j += 1;
                    }
                    None => {
                        let inv = inv_mod(row[j]);
                        for v in row.iter_mut().skip(j) {
                            *v = *v * inv % P;
                        }
                        pivots[j] = Some(row);
                        break;
                    }
                }
            }
        }
    }
    let mut dims = Vec::new();
    let mut start = 0;
    let mut rank = 0;
    for d in 0..=d_max {
        let end = if d == 0 {
            0
        } else {
            monos
                .iter()
                .position(|m| m.iter().sum::<u32>() >= d)
                .unwrap_or(cols)
        };
        rank += pivots[start..end].iter().filter(|p| p.is_some()).count();
        dims.push(end - rank);
        start = end;
    }
    dims
}

fn generic_forms(ideals: &[MonomialIdeal], seed: u64) -> Vec<SparsePoly> {
    let mut rng = sampling::rng(seed);
    ideals
        .iter()
        .map(|a| {
            a.generators()
                .iter()
                .map(|g| (g.clone(), rng.gen_range(1..P)))
                .collect()
        })
        .collect()
}

/// `dim R/(f_1, …, f_n)` in the local ring at the origin, with `f_i` a
/// random combination of the generators of `a_i`, computed modulo a large
/// prime. The degree bound grows until `m^d ⊆ I + m^{d+1}`, which by
/// Nakayama gives `m^d ⊆ I` locally.
pub fn generic_forms_dimension(ideals: &[MonomialIdeal], seed: u64) -> u64 {
    let n = ideals[0].dim();
    let forms = generic_forms(ideals, seed);
    let mut d_max = 4;
    loop {
        let dims = quotient_dims(n, &forms, d_max);
        for d in 1..d_max as usize {
            if dims[d] == dims[d + 1] {
                return dims[d] as u64;
            }
        }
        d_max += 4;
        assert!(d_max <= 96, "no stabilization below degree 96");
    }
}

// ---------------------------------------------------------------------------
// Strict lattice points of c·P, found with a brute-force weight grid.

/// Nonzero nonnegative integer weights with entries at most `k`.
fn weight_grid(n: usize, k: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut w = vec![0i64; n];
    loop {
        if w.iter().any(|&x| x != 0) {
            out.push(w.clone());
        }
        let mut i = 0;
        while i < n && w[i] == k {
            w[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
        w[i] += 1;
    }
}

/// Generators of `{x^m : m + 1 ∈ interior(c·conv(a) + orthant)}`. Interior
/// membership is tested against every weight in a grid large enough to
/// contain all facet normals of the region.
pub fn strict_lattice_l2(a: &MonomialIdeal, c: &Rat) -> MonomialIdeal {
    let n = a.dim();
    let gens = a.generators();
    let max_e = gens.iter().flatten().copied().max().unwrap_or(0) as i64;
    let k = match n {
        1 => 1,
        2 => max_e.max(1),
        _ => (2 * max_e * max_e).max(1),
    };
    let grid = weight_grid(n, k);
    let mins: Vec<Rat> = grid
        .iter()
        .map(|w| {
            let m = gens
                .iter()
                .map(|g| g.iter().zip(w).map(|(x, y)| *x as i64 * y).sum::<i64>())
                .min()
                .unwrap();
            c * rat(m)
        })
        .collect();
    let bound = (c * rat(max_e * n as i64)).ceil().to_integer();
    let bound = u32::try_from(bound).unwrap() + 1;
    let mut found = Vec::new();
    let mut m = vec![0u32; n];
    loop {
        let inside = grid.iter().zip(&mins).all(|(w, lo)| {
            let v: i64 = m.iter().zip(w).map(|(x, y)| (*x as i64 + 1) * y).sum();
            rat(v) > *lo
        });
        if inside {
            found.push(m.clone());
        }
        let mut i = 0;
        while i < n && m[i] == bound {
            m[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        m[i] += 1;
    }
    MonomialIdeal::new(n, found).unwrap()
}

// ---------------------------------------------------------------------------
// Covolume by counting lattice points.

/// Number of `m ∈ Z^n_{≥0}` outside `t·P(a)`.
pub fn lattice_complement_count(a: &MonomialIdeal, t: u32) -> u64 {
    let n = a.dim();
    let scaled: Vec<Vec<u32>> = a
        .generators()
        .iter()
        .map(|g| g.iter().map(|x| x * t).collect())
        .collect();
    let region = NewtonRegion::from_exponents(&scaled).unwrap();
    let bound: Vec<u32> = (0..n)
        .map(|i| {
            scaled
                .iter()
                .filter(|g| g.iter().enumerate().all(|(j, x)| j == i || *x == 0))
                .map(|g| g[i])
                .min()
                .unwrap()
        })
        .collect();
    let mut count = 0;
    let mut m = vec![0u32; n];
    loop {
        let pt: RatVec = m.iter().map(|&x| rat(x as i64)).collect();
        if !region.contains(&pt, false).unwrap() {
            count += 1;
        }
        let mut i = 0;
        while i < n && m[i] == bound[i] {
            m[i] = 0;
            i += 1;
        }
        if i == n {
            return count;
        }
        m[i] += 1;
    }
}

/// Leading coefficient of the polynomial through `(t, count(t))`,
/// `t = 1..=n+1`, checked against one extra point.
pub fn lattice_covolume(a: &MonomialIdeal) -> Rat {
    let n = a.dim();
    let ts: Vec<i64> = (1..=(n as i64 + 2)).collect();
    let ys: Vec<Rat> = ts
        .iter()
        .map(|&t| rat(lattice_complement_count(a, t as u32) as i64))
        .collect();
    // Newton divided differences.
    let mut table = ys.clone();
    let mut coeffs = vec![table[0].clone()];
    for level in 1..ts.len() {
        for i in 0..ts.len() - level {
            table[i] = (&table[i + 1] - &table[i]) / rat(ts[i + level] - ts[i]);
        }
        coeffs.push(table[0].clone());
    }
    assert_eq!(
        coeffs[n + 1],
        rat(0),
        "lattice count is not a polynomial of degree n"
    );
    coeffs[n].clone()
}

// ---------------------------------------------------------------------------
// Monge-Ampère measure in dimension two, edge by edge.

/// Lower-left convex chain of the exponents: vertices of the compact faces.
fn compact_chain(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let mut chain: Vec<(i64, i64)> = Vec::new();
    for p in pts {
        if let Some(last) = chain.last() {
            if p.1 >= last.1 {
                continue;
            }
        }
        while chain.len() >= 2 {
            let a = chain[chain.len() - 2];
            let b = chain[chain.len() - 1];
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross <= 0 {
                chain.pop();
            } else {
                break;
            }
        }
        chain.push(p);
    }
    chain
}

/// Atoms `(normalized weight, mass)` of `MA(c·log|a|)` in two variables:
/// one per compact edge, at the primitive inner normal `e` divided by
/// `b = min e`, with mass `c·b·(lattice length of the edge)`.
pub fn ma_atoms_2d(a: &MonomialIdeal, c: &Rat) -> Vec<(RatVec, Rat)> {
    let pts: Vec<(i64, i64)> = a
        .generators()
        .iter()
        .map(|g| (g[0] as i64, g[1] as i64))
        .collect();
    let chain = compact_chain(&pts);
    let mut atoms: Vec<(RatVec, Rat)> = Vec::new();
    for w in chain.windows(2) {
        let (dx, dy) = (w[1].0 - w[0].0, w[0].1 - w[1].1);
        let len = dx.gcd(&dy);
        let e = (dy / len, dx / len);
        let b = e.0.min(e.1);
        let weight = vec![ratio(e.0, b), ratio(e.1, b)];
        let mass = c * rat(b * len);
        match atoms.iter_mut().find(|(v, _)| *v == weight) {
            Some((_, m)) => *m += mass,
            None => atoms.push((weight, mass)),
        }
    }
    atoms.sort();
    atoms
}
