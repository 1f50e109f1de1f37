//! Randomized property suites behind `valuix check`.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::divisors::{transform, FormalPshToric, PshGerm};
use crate::error::{Error, Result};
use crate::geometry::NewtonRegion;
use crate::intersection::{
    mixed_multiplicity, monge_ampere, relative_type, relative_type_by_containment, theorem_a_check,
};
use crate::multiplier::checks::in_product;
use crate::multiplier::{
    approx_check, decreasing_check, els_approx_check, l2_ideal, nef_envelope, tameness_bound,
};
use crate::rational::{floor_to_i64, Rat, RatVec};
use crate::sampling::{self, Rng64};
use crate::toric::{normal_fan_refinement, pl_from_region, PLFunction};
use crate::valuation::{
    homotopy_eval, monomial_retraction, HomotopyProfile, MonomialValuation, Valuation,
};

pub const SUITES: &[&str] = &[
    "approx",
    "subadditivity",
    "els",
    "izumi",
    "homotopy",
    "ma-identity",
    "theoremA",
];

/// Size knobs; every field falls back to a per-suite default.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Knobs {
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub instances: Option<usize>,
    #[serde(default)]
    pub samples: Option<usize>,
    #[serde(default)]
    pub k_max: Option<u32>,
    #[serde(default)]
    pub max_exp: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub instances: usize,
    pub checks: usize,
    pub failures: Vec<Failure>,
    pub counters: BTreeMap<String, usize>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

#[derive(Default)]
struct Tally {
    instances: usize,
    checks: usize,
    failures: Vec<Failure>,
    counters: BTreeMap<String, usize>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, instance: usize, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                instance,
                detail: detail(),
            });
        }
    }

    fn error(&mut self, instance: usize, e: &Error) {
        self.checks += 1;
        self.failures.push(Failure {
            instance,
            detail: format!("error: {e}"),
        });
    }

    fn run(&mut self, instance: usize, f: impl FnOnce(&mut Self) -> Result<()>) {
        self.instances += 1;
        if let Err(e) = f(self) {
            self.error(instance, &e);
        }
    }

    fn finish(self, suite: &str, seed: u64) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            seed,
            passed: self.failures.is_empty(),
            instances: self.instances,
            checks: self.checks,
            failures: self.failures,
            counters: self.counters,
            notes: self.notes,
        }
    }
}

fn suite_rng(seed: u64, suite: &str) -> Rng64 {
    let idx = SUITES.iter().position(|s| *s == suite).unwrap_or(0) as u64;
    sampling::rng(seed ^ (idx + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn show(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Dimension for instance `i`: the knob, or alternating 2 and 3.
fn dim_for(knobs: &Knobs, i: usize, alternate: bool) -> usize {
    knobs
        .n
        .unwrap_or(if alternate && i % 2 == 1 { 3 } else { 2 })
}

pub fn run_suite(name: &str, seed: u64, knobs: &Knobs) -> Result<SuiteReport> {
    let mut rng = suite_rng(seed, name);
    let mut t = Tally::default();
    match name {
        "approx" => approx(&mut rng, knobs, &mut t),
        "subadditivity" => subadditivity(&mut rng, knobs, &mut t),
        "els" => els(&mut rng, knobs, &mut t),
        "izumi" => izumi(&mut rng, knobs, &mut t),
        "homotopy" => homotopy(&mut rng, knobs, &mut t),
        "ma-identity" => ma_identity(&mut rng, knobs, &mut t),
        "theoremA" => theorem_a(&mut rng, knobs, &mut t),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "unknown suite {name:?}; known suites: {}",
                SUITES.join(", ")
            )))
        }
    }
    Ok(t.finish(name, seed))
}

pub fn run_all(seed: u64, knobs: &Knobs) -> Result<CheckReport> {
    let suites = SUITES
        .iter()
        .map(|s| run_suite(s, seed, knobs))
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport {
        seed,
        passed: suites.iter().all(|s| s.passed),
        suites,
    })
}

fn weights(rng: &mut Rng64, n: usize, count: usize) -> Vec<RatVec> {
    (0..count).map(|_| sampling::weight(rng, n)).collect()
}

/// `k·g ≤ log|L²(k·g)| ≤ k·g + A` and the decreasing approximation.
fn approx(rng: &mut Rng64, knobs: &Knobs, t: &mut Tally) {
    let count = knobs.instances.unwrap_or(20);
    let samples = knobs.samples.unwrap_or(100);
    let k_max = knobs.k_max.unwrap_or(16);
    let max_exp = knobs.max_exp.unwrap_or(6);
    for i in 0..count {
        let n = dim_for(knobs, i, false);
        let g = sampling::primary_region(rng, n, max_exp);
        let ws = weights(rng, n, samples);
        t.run(i, |t| {
            let g = g?;
            for k in 1..=k_max {
                let report = approx_check(&g, k, &ws)?;
                for s in &report.samples {
                    t.check(i, s.holds(), || {
                        format!(
                            "region {} k={k} w={}: {} <= {} <= {} fails",
                            g.region(),
                            show(&s.weight),
                            s.lower,
                            s.middle,
                            s.upper
                        )
                    });
                }
            }
            let d = decreasing_check(&g, 3, &ws[..ws.len().min(10)])?;
            t.check(i, d.decreasing && d.bounded, || {
                format!(
                    "region {}: decreasing approximation decreasing={} bounded={}",
                    g.region(),
                    d.decreasing,
                    d.bounded
                )
            });
            Ok(())
        });
    }
}

fn random_function(rng: &mut Rng64, n: usize, max_exp: u32) -> Result<FormalPshToric> {
    if rng.gen_bool(0.75) {
        sampling::primary_region(rng, n, max_exp)
    } else {
        FormalPshToric::from_ideal(&sampling::ideal(rng, n, n + 2, max_exp, false))
    }
}

/// `L²(g1 + g2) ⊆ L²(g1)·L²(g2)`.
fn subadditivity(rng: &mut Rng64, knobs: &Knobs, t: &mut Tally) {
    let count = knobs.instances.unwrap_or(50);
    let max_exp = knobs.max_exp.unwrap_or(6);
    for i in 0..count {
        let n = dim_for(knobs, i, false);
        let g1 = random_function(rng, n, max_exp);
        let g2 = random_function(rng, n, max_exp);
        t.run(i, |t| {
            let (g1, g2) = (g1?, g2?);
            let sum = crate::divisors::divisor_sum(&g1, &g2)?;
            let lhs = l2_ideal(&sum)?;
            let a = l2_ideal(&g1)?;
            let b = l2_ideal(&g2)?;
            let missing = lhs.generators().iter().find(|m| !in_product(m, &a, &b));
            t.check(i, missing.is_none(), || {
                format!(
                    "regions {} and {}: monomial {:?} of L2(sum) not in {} * {}",
                    g1.region(),
                    g2.region(),
                    missing.expect("failure has a witness"),
                    a,
                    b
                )
            });
            Ok(())
        });
    }
}

fn envelope_instance(rng: &mut Rng64, n: usize) -> Result<(PLFunction, FormalPshToric)> {
    loop {
        let h = sampling::pl_function(rng, n)?;
        let g = nef_envelope(&h)?;
        if !g.is_zero() {
            return Ok((h, g));
        }
    }
}

/// The sandwich, containment and stabilization statements of the
/// bounded-ideal approximation, for `C` the reported tameness bound.
fn els(rng: &mut Rng64, knobs: &Knobs, t: &mut Tally) {
    let count = knobs.instances.unwrap_or(20);
    let samples = knobs.samples.unwrap_or(10);
    let k_max = knobs.k_max.unwrap_or(20);
    for i in 0..count {
        let n = dim_for(knobs, i, false);
        let inst = envelope_instance(rng, n);
        let ws = weights(rng, n, samples);
        t.run(i, |t| {
            let (h, g) = inst?;
            let c = tameness_bound(&g)?;
            let k0 = u32::try_from(floor_to_i64(&c)? + 1).map_err(|_| Error::Overflow)?;
            let mut stabilized = false;
            for k in k0..=k_max {
                let r = els_approx_check(&g, k, &ws)?;
                t.check(i, r.contained, || {
                    format!(
                        "envelope {} k={k} C={c}: L2(kg) not in Linf((k-C)g)",
                        g.region()
                    )
                });
                for s in &r.samples {
                    t.check(i, s.holds(), || {
                        format!(
                            "envelope {} k={k} C={c} w={}: {} <= {} <= {} fails",
                            g.region(),
                            show(&s.weight),
                            s.lower,
                            s.value,
                            s.upper
                        )
                    });
                }
                stabilized |= r.stabilization_holds();
                t.check(i, r.stabilization_holds(), || {
                    format!(
                        "envelope {} of {:?}: stabilization from {:?}, guaranteed from {}",
                        g.region(),
                        h.values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                        r.stable_from,
                        r.guaranteed_from
                    )
                });
            }
            t.check(i, stabilized, || {
                format!(
                    "envelope {}: no k in {k0}..={k_max} exceeds C={c}",
                    g.region()
                )
            });
            Ok(())
        });
    }
}

/// `C·g(ν_m) ≤ g(ν_w) ≤ g(ν_m)` with `C = max w` for normalized `w`.
fn izumi(rng: &mut Rng64, knobs: &Knobs, t: &mut Tally) {
    let count = knobs.instances.unwrap_or(50);
    let max_exp = knobs.max_exp.unwrap_or(6);
    for i in 0..count {
        let n = dim_for(knobs, i, true);
        let g = random_function(rng, n, max_exp);
        let w = sampling::weight(rng, n);
        t.run(i, |t| {
            let g = g?;
            let nu = MonomialValuation::new(w.clone())?;
            let c = nu.izumi_constant();
            let at_m = g.value(MonomialValuation::multiplicity(n).weights())?;
            let at_w = g.value(&w)?;
            t.check(i, &c * &at_m <= at_w && at_w <= at_m, || {
                format!(
                    "region {} w={}: {}*{} <= {} <= {} fails",
                    g.region(),
                    show(&w),
                    c,
                    at_m,
                    at_w,
                    at_m
                )
            });
            Ok(())
        });
    }
}

/// Endpoints and additivity of `h_s`.
fn homotopy(rng: &mut Rng64, knobs: &Knobs, t: &mut Tally) {
    let count = knobs.instances.unwrap_or(100);
    let samples = knobs.samples.unwrap_or(5);
    for i in 0..count {
        let n = dim_for(knobs, i, true);
        let nu = sampling::shifted_valuation(rng, n);
        let f = sampling::polynomial(rng, n, 4, 3);
        let g = sampling::polynomial(rng, n, 4, 3);
        let ss: Vec<Rat> = (0..samples)
            .map(|_| {
                if rng.gen_bool(0.2) {
                    Rat::from_integer(0.into())
                } else {
                    sampling::positive_rat(rng, 12, 4)
                }
            })
            .collect();
        t.run(i, |t| {
            let nu = nu?;
            let profile = HomotopyProfile::new(&nu, &f)?;
            let r = monomial_retraction(&nu)?.eval_poly(&f)?;
            let h0 = profile.eval(&Rat::from_integer(0.into()))?;
            t.check(i, r.finite() == Some(&h0), || {
                format!("f={f}: h_0 = {h0} but r(nu)(f) = {r}")
            });
            let value = nu.eval_poly(&f)?;
            let s_star = profile.threshold();
            for s in [s_star.clone(), &s_star + Rat::from_integer(1.into())] {
                let hs = profile.eval(&s)?;
                t.check(i, value.finite() == Some(&hs), || {
                    format!("f={f}: h at s={s} is {hs} but nu(f) = {value}")
                });
            }
            let fg = f.checked_mul(&g, nu.change().degree_cap())?;
            for s in &ss {
                let lhs = homotopy_eval(&nu, &fg, s)?;
                let rhs = homotopy_eval(&nu, &f, s)? + homotopy_eval(&nu, &g, s)?;
                t.check(i, lhs == rhs, || {
                    format!("f={f}, g={g}, s={s}: h(fg) = {lhs} but h(f)+h(g) = {rhs}")
                });
            }
            Ok(())
        });
    }
}

fn neg_mixed(q: &NewtonRegion, ps: &[NewtonRegion]) -> Result<Rat> {
    let mut all = vec![q.clone()];
    all.extend_from_slice(ps);
    Ok(-mixed_multiplicity(&all)?)
}

/// `∫ g dMA(g_1, …, g_{n−1}) = ⟨g, g_1, …, g_{n−1}⟩` for nef test functions.
fn ma_identity(rng: &mut Rng64, knobs: &Knobs, t: &mut Tally) {
    let count = knobs.instances.unwrap_or(20);
    let max_exp = knobs.max_exp.unwrap_or(4);
    for i in 0..count {
        let n = dim_for(knobs, i, true);
        let gs: Vec<Result<FormalPshToric>> = (0..n - 1)
            .map(|_| sampling::primary_region(rng, n, max_exp))
            .collect();
        let tests: Vec<Result<FormalPshToric>> = (0..3)
            .map(|_| sampling::primary_region(rng, n, max_exp))
            .collect();
        let env_values: Vec<i64> = (0..8).map(|_| rng.gen_range(0..=5)).collect();
        t.run(i, |t| {
            let gs = gs.into_iter().collect::<Result<Vec<_>>>()?;
            let ps: Vec<NewtonRegion> = gs.iter().map(|g| g.region().clone()).collect();
            let mu = monge_ampere(&gs)?;
            let label = || {
                ps.iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            };

            let m =
                FormalPshToric::from_ideal(&crate::divisors::MonomialIdeal::maximal_power(n, 1))?;
            let mass = mu.total_mass();
            let expected = -neg_mixed(m.region(), &ps)?;
            t.check(i, mass == expected, || {
                format!(
                    "MA({}): total mass {mass}, pairing with m gives {expected}",
                    label()
                )
            });

            let mut test_fns: Vec<FormalPshToric> = tests.into_iter().collect::<Result<_>>()?;
            let fan = normal_fan_refinement(&ps)?;
            for p in &ps {
                test_fns.push(FormalPshToric::new(p.clone()));
            }
            let values: RatVec = fan
                .rays()
                .iter()
                .enumerate()
                .map(|(j, r)| {
                    if r.iter().all(|&x| x > 0) {
                        -Rat::from_integer(env_values[j % env_values.len()].into())
                    } else {
                        Rat::from_integer(0.into())
                    }
                })
                .collect();
            let env = nef_envelope(&PLFunction::new(fan.clone(), values)?)?;
            if !env.is_zero() && pl_from_region(env.region(), &fan)?.is_nef()? {
                test_fns.push(env);
            }
            for q in &test_fns {
                let lhs = mu.integrate(q)?;
                let rhs = neg_mixed(q.region(), &ps)?;
                t.check(i, lhs == rhs, || {
                    format!(
                        "MA({}) against {}: integral {lhs}, intersection {rhs}",
                        label(),
                        q.region()
                    )
                });
            }
            for p in &ps {
                let h = pl_from_region(p, &fan)?;
                t.check(i, h.is_nef()?, || {
                    format!("{p} is not nef on its determination fan {fan}")
                });
            }
            Ok(())
        });
    }
}

/// A second presentation of `u` with the same transform: each ideal is
/// replaced by another with the same Newton region, or by its square with
/// half the coefficient when that yields the same ideal.
fn same_region_variant(rng: &mut Rng64, u: &PshGerm) -> Result<PshGerm> {
    let two = Rat::from_integer(2.into());
    let terms = u
        .terms()
        .iter()
        .map(|(c, a)| {
            let b = sampling::closure_variant(rng, a)?;
            Ok(if b == *a {
                (c / &two, a.power(2))
            } else {
                (c.clone(), b)
            })
        })
        .collect::<Result<_>>()?;
    PshGerm::new(u.dim(), terms)
}

/// Relative types against `−û(ν_w)`, and the equivalences between equal
/// regions, equal multiplier ideals, equal relative types and equal
/// generalized Lelong numbers.
fn theorem_a(rng: &mut Rng64, knobs: &Knobs, t: &mut Tally) {
    let count = knobs.instances.unwrap_or(20);
    let samples = knobs.samples.unwrap_or(50);
    let max_exp = knobs.max_exp.unwrap_or(4);
    for i in 0..samples {
        let n = dim_for(knobs, i, true);
        let u = sampling::germ(rng, n, max_exp, false);
        let w = sampling::weight(rng, n);
        t.run(i, |t| {
            let u = u?;
            let rt = relative_type(&u, &w)?;
            let by_containment = relative_type_by_containment(&u, &w)?;
            let value = transform(&u)?.value(&w)?;
            t.check(i, rt == -value.clone() && rt == by_containment, || {
                format!(
                    "w={}: relative type {rt}, by containment {by_containment}, transform value {value}",
                    show(&w)
                )
            });
            Ok(())
        });
    }
    let mut separated = 0usize;
    let mut distinct = 0usize;
    let mut same_region = 0usize;
    for i in 0..count {
        let n = dim_for(knobs, i, true);
        let u = sampling::germ(rng, n, max_exp, true);
        let v = match (i % 3, &u) {
            (0, Ok(u)) => same_region_variant(rng, u),
            _ => sampling::germ(rng, n, max_exp, true),
        };
        let ws = weights(rng, n, 5);
        let mut phis = vec![PshGerm::log_ideal(
            crate::divisors::MonomialIdeal::maximal_power(n, 1),
        )];
        phis.push(PshGerm::log_ideal(sampling::ideal(rng, n, n + 1, 3, true)));
        let idx = samples + i;
        t.run(idx, |t| {
            let (u, v) = (u?, v?);
            let r = theorem_a_check(&u, &v, &ws, &phis)?;
            t.check(idx, r.consistent(), || format!("inconsistent report {r:?}"));
            if r.regions_equal && u != v {
                same_region += 1;
            }
            if let Some(sep) = r.lelong_separates() {
                distinct += 1;
                separated += usize::from(sep);
            }
            Ok(())
        });
    }
    t.counters.insert("same_region_pairs".into(), same_region);
    t.counters.insert("distinct_region_pairs".into(), distinct);
    t.counters.insert("lelong_separated".into(), separated);
    t.notes.push(format!(
        "{same_region} pairs are different presentations of equal regions"
    ));
    t.notes.push(format!(
        "generalized Lelong numbers separated {separated} of {distinct} pairs with distinct regions"
    ));
}
