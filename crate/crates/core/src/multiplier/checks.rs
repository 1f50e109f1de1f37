//! Exact checkers for the approximation, subadditivity and tameness
//! statements about multiplier ideals.

use std::ops::RangeInclusive;

use num_traits::{One, Zero};

use crate::divisors::{FormalPshToric, MonomialIdeal};
use crate::error::{Error, Result};
use crate::multiplier::ideals::{l2_ideal, l2_ideal_scaled, linf_ideal_scaled, threshold};
use crate::rational::{dot_int, is_positive, ExtRat, Rat, RatVec};
use crate::toric::cone::ray_to_rat;
use crate::toric::normal_fan_refinement;

/// `ν_w(a) = min ⟨w, m⟩` over the generators of `a`.
pub fn ideal_value(a: &MonomialIdeal, w: &[Rat]) -> Rat {
    a.generators()
        .iter()
        .map(|m| dot_int(w, m))
        .min()
        .expect("ideal is nonzero")
}

fn thinness(w: &[Rat]) -> Rat {
    w.iter().sum()
}

fn check_weight(w: &[Rat], n: usize) -> Result<()> {
    crate::rational::check_dim(n, w.len())?;
    if !is_positive(w) {
        return Err(Error::NonPositive(format!("sample weight {w:?}")));
    }
    Ok(())
}

/// `k·g(w) ≤ −ν_w(L²(k·g)) ≤ k·g(w) + A(w)` at one weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxSample {
    pub weight: RatVec,
    pub lower: Rat,
    pub middle: Rat,
    pub upper: Rat,
}

impl ApproxSample {
    pub fn holds(&self) -> bool {
        self.lower <= self.middle && self.middle <= self.upper
    }

    /// Distance to the nearer end of the sandwich (negative when violated).
    pub fn slack(&self) -> Rat {
        let a = &self.middle - &self.lower;
        let b = &self.upper - &self.middle;
        a.min(b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxReport {
    pub k: u32,
    pub ideal: MonomialIdeal,
    pub samples: Vec<ApproxSample>,
}

impl ApproxReport {
    pub fn holds(&self) -> bool {
        self.samples.iter().all(ApproxSample::holds)
    }
}

/// Checks `k·g ≤ Z(L²(k·g)) ≤ k·g + A` at each sample weight.
pub fn approx_check(g: &FormalPshToric, k: u32, samples: &[RatVec]) -> Result<ApproxReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let kr = Rat::from_integer(k.into());
    let ideal = l2_ideal_scaled(g, &kr)?;
    let mut out = Vec::new();
    for w in samples {
        check_weight(w, g.dim())?;
        let lower = &kr * g.value(w)?;
        let middle = -ideal_value(&ideal, w);
        let upper = &lower + thinness(w);
        out.push(ApproxSample {
            weight: w.clone(),
            lower,
            middle,
            upper,
        });
    }
    Ok(ApproxReport {
        k,
        ideal,
        samples: out,
    })
}

/// Whether `m` lies in the product `a·b`.
pub fn in_product(m: &[u32], a: &MonomialIdeal, b: &MonomialIdeal) -> bool {
    a.generators().iter().any(|p| {
        b.generators()
            .iter()
            .any(|q| m.iter().zip(p.iter().zip(q)).all(|(x, (y, z))| *x >= y + z))
    })
}

/// `L²(g1 + g2) ⊆ L²(g1)·L²(g2)`.
pub fn subadditivity_check(g1: &FormalPshToric, g2: &FormalPshToric) -> Result<bool> {
    let sum = crate::divisors::divisor_sum(g1, g2)?;
    let lhs = l2_ideal(&sum)?;
    let a = l2_ideal(g1)?;
    let b = l2_ideal(g2)?;
    Ok(lhs.generators().iter().all(|m| in_product(m, &a, &b)))
}

/// A-priori tameness constant `max A(e) / (−g(e))` over the rays `e` with
/// positive entries of the determination fan of `g`.
pub fn tameness_bound(g: &FormalPshToric) -> Result<Rat> {
    if g.is_zero() {
        return Err(Error::InvalidArgument(
            "tameness is undefined for the zero function".into(),
        ));
    }
    let fan = normal_fan_refinement(std::slice::from_ref(g.region()))?;
    let mut best = Rat::zero();
    for i in fan.interior_rays() {
        let e = ray_to_rat(&fan.rays()[i]);
        let s = g.region().support(&e);
        if s.is_zero() {
            continue;
        }
        let r = thinness(&e) / s;
        if r > best {
            best = r;
        }
    }
    Ok(best)
}

/// Least `C ≥ 0` with `L²(k·g) ⊆ L∞((k − C)·g)` at a single `k`.
pub fn tameness_at(g: &FormalPshToric, k: u32) -> Result<Rat> {
    let kr = Rat::from_integer(k.into());
    let ideal = l2_ideal_scaled(g, &kr)?;
    let mut c = Rat::zero();
    for m in ideal.generators() {
        for h in g.region().facets() {
            let need = &kr - dot_int(&h.normal, m) / &h.offset;
            if need > c {
                c = need;
            }
        }
    }
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TamenessReport {
    /// `max A / (−g)` over the determination fan.
    pub bound: Rat,
    /// Least `C` working for every tested `k`.
    pub empirical: Rat,
    pub per_k: Vec<(u32, Rat)>,
}

pub fn tameness_constant(g: &FormalPshToric, ks: RangeInclusive<u32>) -> Result<TamenessReport> {
    let bound = tameness_bound(g)?;
    let mut per_k = Vec::new();
    let mut empirical = Rat::zero();
    for k in ks {
        if k == 0 {
            continue;
        }
        let c = tameness_at(g, k)?;
        if c > empirical {
            empirical = c.clone();
        }
        per_k.push((k, c));
    }
    Ok(TamenessReport {
        bound,
        empirical,
        per_k,
    })
}

/// `W_k = (1/k)·P(L∞(k·g))`.
pub fn bounded_approximation(g: &FormalPshToric, k: &Rat) -> Result<FormalPshToric> {
    let ideal = linf_ideal_scaled(g, k)?;
    Ok(FormalPshToric::new(
        ideal.region()?.scale(&(Rat::one() / k))?,
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElsSample {
    pub weight: RatVec,
    /// `W_k(w)`, `W(w)` and `(1 − C/k)·W_{k−C}(w)`.
    pub lower: Rat,
    pub value: Rat,
    pub upper: Rat,
}

impl ElsSample {
    pub fn holds(&self) -> bool {
        self.lower <= self.value && self.value <= self.upper
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElsReport {
    pub c: Rat,
    pub k: u32,
    /// `L²(k·g) ⊆ L∞((k − C)·g)`.
    pub contained: bool,
    pub samples: Vec<ElsSample>,
    /// Least `k'` with `L²(W_j) = L²(g)` for every `j` from `k'` to `scan_to`.
    pub stable_from: Option<u32>,
    /// Stabilization is guaranteed from here on.
    pub guaranteed_from: u32,
    pub scan_to: u32,
}

impl ElsReport {
    pub fn sandwich_holds(&self) -> bool {
        self.samples.iter().all(ElsSample::holds)
    }

    pub fn stabilization_holds(&self) -> bool {
        self.stable_from.is_some_and(|s| s <= self.guaranteed_from)
    }

    pub fn holds(&self) -> bool {
        self.contained && self.sandwich_holds() && self.stabilization_holds()
    }
}

/// Checks `W_k ≤ W ≤ (1 − C/k)·W_{k−C}` at the rays of the determination fan
/// and the extra samples, and that `L²(W_j) = L²(W)` for all large `j`.
pub fn els_approx_check(g: &FormalPshToric, k: u32, samples: &[RatVec]) -> Result<ElsReport> {
    let c = tameness_bound(g)?;
    let kr = Rat::from_integer(k.into());
    if kr <= c {
        return Err(Error::InvalidArgument(format!(
            "k = {k} must exceed the tameness constant {c}"
        )));
    }
    let fan = normal_fan_refinement(std::slice::from_ref(g.region()))?;
    let mut weights: Vec<RatVec> = fan.rays().iter().map(|r| ray_to_rat(r)).collect();
    for w in samples {
        check_weight(w, g.dim())?;
        weights.push(w.clone());
    }
    let lower_ideal = linf_ideal_scaled(g, &kr)?;
    let upper_ideal = linf_ideal_scaled(g, &(&kr - &c))?;
    let contained = l2_ideal_scaled(g, &kr)?
        .generators()
        .iter()
        .all(|m| upper_ideal.contains_monomial(m));
    let samples = weights
        .into_iter()
        .map(|w| {
            Ok(ElsSample {
                lower: -ideal_value(&lower_ideal, &w) / &kr,
                value: g.value(&w)?,
                upper: -ideal_value(&upper_ideal, &w) / &kr,
                weight: w,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let target = l2_ideal(g)?;
    let tau = target
        .generators()
        .iter()
        .map(|m| threshold(g.region(), m))
        .min()
        .expect("ideal is nonzero");
    let guaranteed_from = match tau {
        ExtRat::Infinity => 1,
        ExtRat::Finite(t) => {
            let q = &c / (t - Rat::one());
            u32::try_from(crate::rational::floor_to_i64(&q)? + 1).map_err(|_| Error::Overflow)?
        }
    };
    let scan_to = guaranteed_from.max(k).max(18) + 2;
    let mut stable_from = None;
    for j in 1..=scan_to {
        let wj = bounded_approximation(g, &Rat::from_integer(j.into()))?;
        if l2_ideal(&wj)? == target {
            stable_from.get_or_insert(j);
        } else {
            stable_from = None;
        }
    }
    Ok(ElsReport {
        c,
        k,
        contained,
        samples,
        stable_from,
        guaranteed_from,
        scan_to,
    })
}

/// `h_k = 2^{-k}·P(L²(2^k g) + m^{4^k})`.
pub fn decreasing_approximation(g: &FormalPshToric, k: u32) -> Result<FormalPshToric> {
    let n = g.dim();
    let two_k = Rat::from_integer(num_bigint::BigInt::from(2u32).pow(k));
    let l2 = l2_ideal_scaled(g, &two_k)?;
    let cap = u32::try_from(4u64.pow(k)).map_err(|_| Error::Overflow)?;
    let mut pts: Vec<RatVec> = l2
        .generators()
        .iter()
        .map(|m| crate::rational::int_vec_to_rat(m))
        .collect();
    for i in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[i] = Rat::from_integer(cap.into());
        pts.push(e);
    }
    let region = crate::geometry::NewtonRegion::from_points(&pts)?;
    Ok(FormalPshToric::new(region.scale(&(Rat::one() / two_k))?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecreasingReport {
    /// `h_k(w)` for `k = 0..=k_max`, per sample.
    pub values: Vec<(RatVec, Vec<Rat>)>,
    pub decreasing: bool,
    pub bounded: bool,
}

/// Checks that `h_k` decreases in `k` and that
/// `g ≤ h_k ≤ max(g + A/2^k, −2^k·min w)` at each sample.
pub fn decreasing_check(
    g: &FormalPshToric,
    k_max: u32,
    samples: &[RatVec],
) -> Result<DecreasingReport> {
    let hs: Vec<FormalPshToric> = (0..=k_max)
        .map(|k| decreasing_approximation(g, k))
        .collect::<Result<_>>()?;
    let mut values = Vec::new();
    let mut decreasing = true;
    let mut bounded = true;
    for w in samples {
        check_weight(w, g.dim())?;
        let gw = g.value(w)?;
        let min_w = crate::rational::min_entry(w).expect("nonempty");
        let mut row = Vec::new();
        for (k, h) in hs.iter().enumerate() {
            let v = h.value(w)?;
            let scale = Rat::from_integer(num_bigint::BigInt::from(2u32).pow(k as u32));
            let cap = -(&scale * &min_w);
            let upper = (&gw + thinness(w) / &scale).max(cap);
            if v < gw || v > upper {
                bounded = false;
            }
            if let Some(prev) = row.last() {
                if v > *prev {
                    decreasing = false;
                }
            }
            row.push(v);
        }
        values.push((w.clone(), row));
    }
    Ok(DecreasingReport {
        values,
        decreasing,
        bounded,
    })
}
