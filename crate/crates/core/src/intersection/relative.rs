//! Relative types, extremal functions and the comparison of germs through
//! regions, multiplier ideals, relative types and generalized Lelong numbers.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::divisors::{kiselman, transform, FormalPshToric, MonomialIdeal, PshGerm};
use crate::error::{Error, Result};
use crate::geometry::NewtonRegion;
use crate::intersection::ma::generalized_lelong;
use crate::multiplier::{jumping_ladder, l2_ideal_scaled, lct};
use crate::rational::{dot, is_positive, min_entry, ExtRat, Rat, RatVec};

/// The largest toric formal psh function with value `−1` at `ν_w`: the
/// region `{m ≥ 0 : ⟨w, m⟩ ≥ 1}`.
pub fn extremal_weight_region(w: &[Rat]) -> Result<FormalPshToric> {
    if w.is_empty() {
        return Err(Error::Empty("weight vector"));
    }
    if !is_positive(w) {
        return Err(Error::NonPositive(format!("weight {w:?}")));
    }
    let n = w.len();
    let pts: Vec<RatVec> = (0..n)
        .map(|i| {
            let mut p = vec![Rat::zero(); n];
            p[i] = Rat::one() / &w[i];
            p
        })
        .collect();
    Ok(FormalPshToric::new(NewtonRegion::from_points(&pts)?))
}

/// `σ(u, φ_w) = −û(ν_w) = Σ c_i ν_w(a_i)`.
pub fn relative_type(u: &PshGerm, w: &[Rat]) -> Result<Rat> {
    kiselman(u, w)
}

/// `sup{c ≥ 0 : û ≤ c·ĝ_w}`, computed as the largest `c` with the region of
/// `u` inside `c` times the extremal region of `w`.
pub fn relative_type_by_containment(u: &PshGerm, w: &[Rat]) -> Result<Rat> {
    let p = transform(u)?.into_region();
    let q = extremal_weight_region(w)?.into_region();
    let c = p
        .generators()
        .iter()
        .map(|g| dot(w, g))
        .min()
        .expect("regions have generators");
    if c.is_zero() {
        return Ok(c);
    }
    let scaled = q.scale(&c)?;
    if !scaled.contains_region(&p) {
        return Err(Error::Inconsistent(format!(
            "region {p} is not inside {c}·{q}"
        )));
    }
    Ok(c)
}

fn normalized(w: &[Rat]) -> RatVec {
    let m = min_entry(w).expect("nonempty");
    w.iter().map(|x| x / &m).collect()
}

/// Positive weights at which the two regions have different support
/// functions, one for each (facet, generator) pair witnessing a difference,
/// plus the positive facet normals; all normalized.
pub fn separating_weights(p: &NewtonRegion, q: &NewtonRegion) -> Vec<RatVec> {
    let mut out = BTreeSet::new();
    for (a, b) in [(p, q), (q, p)] {
        for h in a.facets() {
            if is_positive(&h.normal) {
                out.insert(normalized(&h.normal));
            }
            for g in b.generators() {
                let v = dot(&h.normal, g);
                if v < h.offset {
                    let s: Rat = g.iter().sum();
                    let eps = (&h.offset - v) / (Rat::from_integer(2.into()) * (s + Rat::one()));
                    let w: RatVec = h.normal.iter().map(|x| x + &eps).collect();
                    out.insert(normalized(&w));
                }
            }
        }
    }
    out.into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremAReport {
    /// (1) the transforms have the same region.
    pub regions_equal: bool,
    /// (2) `L²(t·û) = L²(t·v̂)` at every tested `t`.
    pub multiplier_equal: bool,
    pub multiplier_witness: Option<(Rat, MonomialIdeal, MonomialIdeal)>,
    pub thresholds_tested: usize,
    pub cap: Rat,
    /// (3) equal relative types at every tested weight.
    pub relative_types_equal: bool,
    pub relative_type_witness: Option<(RatVec, Rat, Rat)>,
    /// (4) equal generalized Lelong numbers against every tested weight.
    pub lelong_equal: bool,
    pub lelong_witness: Option<(usize, Rat, Rat)>,
}

impl TheoremAReport {
    /// `(1) ⇔ (2) ⇔ (3)` and `(1) ⇒ (4)`.
    pub fn consistent(&self) -> bool {
        self.regions_equal == self.multiplier_equal
            && self.multiplier_equal == self.relative_types_equal
            && (!self.regions_equal || self.lelong_equal)
    }

    /// For distinct regions, whether the Lelong numbers told them apart.
    /// The converse direction is reported only.
    pub fn lelong_separates(&self) -> Option<bool> {
        (!self.regions_equal).then_some(!self.lelong_equal)
    }
}

pub fn theorem_a_check(
    u: &PshGerm,
    v: &PshGerm,
    weights: &[RatVec],
    phis: &[PshGerm],
) -> Result<TheoremAReport> {
    crate::rational::check_dim(u.dim(), v.dim())?;
    let n = u.dim();
    let gu = transform(u)?;
    let gv = transform(v)?;
    let regions_equal = gu == gv;

    // (2)
    let seps = separating_weights(gu.region(), gv.region());
    let lcts: Vec<Rat> = [lct(&gu), lct(&gv)]
        .into_iter()
        .filter_map(|l| l.finite().cloned())
        .collect();
    let mut cap = lcts
        .iter()
        .max()
        .map_or(Rat::one(), |l| l * Rat::from_integer(n.into()));
    let mut sep_cap: Option<Rat> = None;
    for w in &seps {
        let delta = gu.region().support(w) - gv.region().support(w);
        if delta.is_zero() {
            continue;
        }
        let delta = if delta < Rat::zero() { -delta } else { delta };
        let t = w.iter().sum::<Rat>() / delta + Rat::one();
        if sep_cap.as_ref().is_none_or(|s| t < *s) {
            sep_cap = Some(t);
        }
    }
    if let Some(t) = sep_cap {
        if t > cap {
            cap = t;
        }
    }
    let mut ts: BTreeSet<Rat> = BTreeSet::new();
    ts.insert(cap.clone());
    if let Some(l) = lcts.iter().min() {
        ts.insert(l / Rat::from_integer(2.into()));
    }
    for g in [&gu, &gv] {
        ts.extend(jumping_ladder(g, Some(cap.clone()))?.thresholds);
    }
    let mut multiplier_witness = None;
    for t in &ts {
        let a = l2_ideal_scaled(&gu, t)?;
        let b = l2_ideal_scaled(&gv, t)?;
        if a != b {
            multiplier_witness = Some((t.clone(), a, b));
            break;
        }
    }

    // (3)
    let mut ws: BTreeSet<RatVec> = weights.iter().map(|w| normalized(w)).collect();
    ws.extend(seps);
    let mut relative_type_witness = None;
    for w in &ws {
        let a = relative_type(u, w)?;
        let b = relative_type(v, w)?;
        if a != b {
            relative_type_witness = Some((w.clone(), a, b));
            break;
        }
    }

    // (4)
    let mut lelong_witness = None;
    for (i, phi) in phis.iter().enumerate() {
        let a = generalized_lelong(u, phi)?;
        let b = generalized_lelong(v, phi)?;
        if a != b {
            lelong_witness = Some((i, a, b));
            break;
        }
    }

    Ok(TheoremAReport {
        regions_equal,
        multiplier_equal: multiplier_witness.is_none(),
        multiplier_witness,
        thresholds_tested: ts.len(),
        cap,
        relative_types_equal: relative_type_witness.is_none(),
        relative_type_witness,
        lelong_equal: lelong_witness.is_none(),
        lelong_witness,
    })
}

/// `lct` as an extended rational, re-exported for reports.
pub fn lct_of(u: &PshGerm) -> Result<ExtRat> {
    Ok(lct(&transform(u)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_vec, ratio};

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(gens[0].len(), gens.iter().map(|g| g.to_vec())).unwrap()
    }

    fn germ(gens: &[&[u32]]) -> PshGerm {
        PshGerm::log_ideal(ideal(gens))
    }

    #[test]
    fn extremal_examples() {
        let g = extremal_weight_region(&rat_vec(&[1, 1])).unwrap();
        assert_eq!(
            g.region(),
            &NewtonRegion::from_points(&[rat_vec(&[1, 0]), rat_vec(&[0, 1])]).unwrap()
        );
        let g = extremal_weight_region(&rat_vec(&[2, 1])).unwrap();
        assert_eq!(
            g.region().generators(),
            &[vec![rat(0), rat(1)], vec![ratio(1, 2), rat(0)]]
        );
        assert_eq!(g.value(&rat_vec(&[2, 1])).unwrap(), rat(-1));
        let w = rat_vec(&[3, 5]);
        assert_eq!(g.value(&w).unwrap(), -(ratio(3, 2).min(rat(5))));
    }

    #[test]
    fn relative_type_examples() {
        let x = germ(&[&[1, 0]]);
        let w = rat_vec(&[2, 1]);
        assert_eq!(relative_type(&x, &w).unwrap(), rat(2));
        assert_eq!(relative_type_by_containment(&x, &w).unwrap(), rat(2));
        let m = germ(&[&[1, 0], &[0, 1]]);
        for w in [
            rat_vec(&[1, 1]),
            rat_vec(&[1, 7]),
            vec![rat(1), ratio(5, 3)],
        ] {
            assert_eq!(relative_type(&m, &w).unwrap(), rat(1));
            assert_eq!(relative_type_by_containment(&m, &w).unwrap(), rat(1));
        }
        let c = germ(&[&[2, 0], &[0, 3]]);
        let w = vec![ratio(3, 2), rat(1)];
        assert_eq!(relative_type(&c, &w).unwrap(), rat(3));
        assert_eq!(relative_type_by_containment(&c, &w).unwrap(), rat(3));
    }

    #[test]
    fn theorem_a_examples() {
        let phis = vec![germ(&[&[1, 0], &[0, 3]]), germ(&[&[1, 0], &[0, 1]])];
        let ws = vec![rat_vec(&[1, 1]), rat_vec(&[2, 1])];

        let r = theorem_a_check(
            &germ(&[&[1, 0], &[0, 2]]),
            &germ(&[&[1, 0], &[1, 1], &[0, 2]]),
            &ws,
            &phis,
        )
        .unwrap();
        assert!(r.regions_equal && r.multiplier_equal && r.relative_types_equal && r.lelong_equal);

        let m = ideal(&[&[1, 0], &[0, 1]]);
        let two_m = PshGerm::new(2, vec![(rat(2), m)]).unwrap();
        let r = theorem_a_check(&germ(&[&[2, 0], &[1, 1], &[0, 2]]), &two_m, &ws, &phis).unwrap();
        assert!(r.regions_equal && r.consistent());

        let r = theorem_a_check(
            &germ(&[&[1, 0], &[0, 2]]),
            &germ(&[&[2, 0], &[0, 1]]),
            &ws,
            &phis,
        )
        .unwrap();
        assert!(!r.regions_equal);
        assert!(r.consistent(), "{r:?}");
        assert_eq!(r.lelong_separates(), Some(true));
        let (i, a, b) = r.lelong_witness.clone().unwrap();
        assert_eq!(i, 0);
        assert_eq!((a, b), (rat(2), rat(1)));
    }

    #[test]
    fn integral_closure_is_invisible() {
        // (x^2, y^2) and (x^2, xy, y^2) have the same region only after
        // closure; here they differ since xy lies on the segment.
        let a = germ(&[&[2, 0], &[0, 2]]);
        let b = germ(&[&[2, 0], &[1, 1], &[0, 2]]);
        let r = theorem_a_check(&a, &b, &[], &[]).unwrap();
        assert!(r.regions_equal && r.consistent());
        let c = germ(&[&[4, 0], &[0, 4]]);
        let d = germ(&[&[4, 0], &[1, 1], &[0, 4]]);
        let r = theorem_a_check(&c, &d, &[], &[]).unwrap();
        assert!(!r.regions_equal && r.consistent(), "{r:?}");
    }
}
