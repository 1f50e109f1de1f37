//! One function per subcommand: parse the input document, compute, and
//! return the output document.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cli::json::{
    parse_rats, pl_from_doc, rat_str, rat_strs, DualComplexDoc, FanDoc, GeneratorsDoc, GermDoc,
    IdealDoc, MeasureDoc, PolyDoc, RegionDoc, ValuationDoc,
};
use crate::divisors::{kiselman, lelong_number, transform, FormalPshToric, MonomialIdeal, PshGerm};
use crate::error::{Error, Result};
use crate::geometry::NewtonRegion;
use crate::intersection::{generalized_lelong, intersection, mixed_multiplicity, monge_ampere};
use crate::multiplier::{l2_ideal_scaled, lct, linf_ideal_scaled, nef_envelope};
use crate::rational::{parse_rat, Rat};
use crate::toric::cone::ray_to_rat;
use crate::toric::{dual_complex, retract_check, Fan};
use crate::valuation::{monomial_retraction, HomotopyProfile, Valuation};

fn parse<T: for<'de> Deserialize<'de>>(input: &Value) -> Result<T> {
    T::deserialize(input).map_err(|e| Error::Parse(e.to_string()))
}

fn to_value<T: Serialize>(doc: &T) -> Value {
    serde_json::to_value(doc).expect("documents serialize")
}

fn regions(ideals: &[IdealDoc]) -> Result<Vec<NewtonRegion>> {
    ideals.iter().map(|d| d.to_ideal()?.region()).collect()
}

pub fn lct_cmd(input: &Value) -> Result<Value> {
    let a = parse::<IdealDoc>(input)?.to_ideal()?;
    Ok(Value::String(
        lct(&FormalPshToric::from_ideal(&a)?).to_string(),
    ))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ScaledIdealDoc {
    n: usize,
    generators: Vec<Vec<u32>>,
    #[serde(default)]
    c: Option<String>,
}

impl ScaledIdealDoc {
    fn split(self) -> Result<(MonomialIdeal, Rat)> {
        let a = IdealDoc {
            n: self.n,
            generators: self.generators,
        }
        .to_ideal()?;
        let c = match self.c {
            Some(s) => parse_rat(&s)?,
            None => Rat::from_integer(1.into()),
        };
        Ok((a, c))
    }
}

fn generators(a: &MonomialIdeal) -> Value {
    to_value(&GeneratorsDoc {
        generators: a.generators().to_vec(),
    })
}

pub fn multiplier_cmd(input: &Value) -> Result<Value> {
    let (a, c) = parse::<ScaledIdealDoc>(input)?.split()?;
    Ok(generators(&l2_ideal_scaled(
        &FormalPshToric::from_ideal(&a)?,
        &c,
    )?))
}

pub fn linf_cmd(input: &Value) -> Result<Value> {
    let (a, c) = parse::<ScaledIdealDoc>(input)?.split()?;
    Ok(generators(&linf_ideal_scaled(
        &FormalPshToric::from_ideal(&a)?,
        &c,
    )?))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EnvelopeInput {
    n: usize,
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<usize>>,
    values: Vec<String>,
}

#[derive(Serialize)]
struct EnvelopeOutput {
    nef: bool,
    region: RegionDoc,
    values: Vec<String>,
}

pub fn envelope_cmd(input: &Value) -> Result<Value> {
    let doc: EnvelopeInput = parse(input)?;
    let fan = FanDoc {
        n: doc.n,
        rays: doc.rays,
        cones: doc.cones,
    };
    let h = pl_from_doc(&fan, &doc.values)?;
    let env = nef_envelope(&h)?;
    let values = fan
        .rays
        .iter()
        .map(|r| env.value(&ray_to_rat(r)))
        .collect::<Result<Vec<_>>>()?;
    Ok(to_value(&EnvelopeOutput {
        nef: h.is_nef()?,
        region: RegionDoc::from_region(env.region()),
        values: rat_strs(&values),
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealsInput {
    #[serde(default)]
    n: Option<usize>,
    ideals: Vec<IdealDoc>,
}

pub fn mixed_mult_cmd(input: &Value) -> Result<Value> {
    let doc: IdealsInput = parse(input)?;
    Ok(Value::String(rat_str(&mixed_multiplicity(&regions(
        &doc.ideals,
    )?)?)))
}

pub fn intersection_cmd(input: &Value) -> Result<Value> {
    let doc: IdealsInput = parse(input)?;
    Ok(Value::String(rat_str(
        &intersection(&regions(&doc.ideals)?)?.value,
    )))
}

pub fn monge_ampere_cmd(input: &Value) -> Result<Value> {
    let doc: IdealsInput = parse(input)?;
    let n = doc.n.unwrap_or(doc.ideals.len() + 1);
    if n != doc.ideals.len() + 1 {
        return Err(Error::InvalidArgument(format!(
            "n = {n} needs {} ideals, got {}",
            n.saturating_sub(1),
            doc.ideals.len()
        )));
    }
    let gs = doc
        .ideals
        .iter()
        .map(|d| FormalPshToric::from_ideal(&d.to_ideal()?))
        .collect::<Result<Vec<_>>>()?;
    for g in &gs {
        crate::rational::check_dim(n, g.dim())?;
    }
    Ok(to_value(&MeasureDoc::from_measure(&monge_ampere(&gs)?)))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LelongInput {
    u: GermDoc,
    #[serde(default)]
    phi: Option<GermDoc>,
}

/// Without `phi`, the ordinary Lelong number `−û(ν_m)`.
pub fn lelong_cmd(input: &Value) -> Result<Value> {
    let doc: LelongInput = parse(input)?;
    let u = doc.u.to_germ()?;
    let v = match doc.phi {
        Some(phi) => generalized_lelong(&u, &phi.to_germ()?)?,
        None => lelong_number(&u)?,
    };
    Ok(Value::String(rat_str(&v)))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GermWeightInput {
    u: GermDoc,
    w: Vec<String>,
}

fn germ_and_weight(input: &Value) -> Result<(PshGerm, Vec<Rat>)> {
    let doc: GermWeightInput = parse(input)?;
    let u = doc.u.to_germ()?;
    let w = parse_rats(&doc.w)?;
    crate::rational::check_dim(u.dim(), w.len())?;
    Ok((u, w))
}

pub fn relative_type_cmd(input: &Value) -> Result<Value> {
    let (u, w) = germ_and_weight(input)?;
    Ok(Value::String(rat_str(&kiselman(&u, &w)?)))
}

pub fn transform_eval_cmd(input: &Value) -> Result<Value> {
    let (u, w) = germ_and_weight(input)?;
    Ok(Value::String(rat_str(&transform(&u)?.value(&w)?)))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HomotopyInput {
    n: usize,
    #[serde(default)]
    shifts: Vec<PolyDoc>,
    weights: Vec<String>,
    f: PolyDoc,
    s: String,
}

#[derive(Serialize)]
struct HomotopyOutput {
    value: String,
    retraction: String,
    limit: String,
    threshold: String,
}

pub fn homotopy_cmd(input: &Value, max_degree: u32) -> Result<Value> {
    let doc: HomotopyInput = parse(input)?;
    let nu = ValuationDoc {
        n: doc.n,
        shifts: doc.shifts,
        weights: doc.weights,
    }
    .to_valuation(max_degree)?;
    let f = doc.f.to_poly(doc.n)?;
    let s = parse_rat(&doc.s)?;
    let profile = HomotopyProfile::new(&nu, &f)?;
    let r = monomial_retraction(&nu)?.eval_poly(&f)?;
    Ok(to_value(&HomotopyOutput {
        value: rat_str(&profile.eval(&s)?),
        retraction: r.to_string(),
        limit: rat_str(profile.limit()),
        threshold: rat_str(&profile.threshold()),
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RetractInput {
    n: usize,
    #[serde(default)]
    shifts: Vec<PolyDoc>,
    weights: Vec<String>,
    #[serde(default)]
    fan: Option<FanDoc>,
}

#[derive(Serialize)]
struct RetractOutput {
    weights: Vec<String>,
}

pub fn retract_cmd(input: &Value, max_degree: u32) -> Result<Value> {
    let doc: RetractInput = parse(input)?;
    let nu = ValuationDoc {
        n: doc.n,
        shifts: doc.shifts,
        weights: doc.weights,
    }
    .to_valuation(max_degree)?;
    let fan = match doc.fan {
        Some(f) => f.to_fan()?,
        None => Fan::orthant(doc.n),
    };
    let r = retract_check(&nu, &fan)?;
    Ok(to_value(&RetractOutput {
        weights: rat_strs(r.weights()),
    }))
}

pub fn dual_complex_cmd(input: &Value) -> Result<Value> {
    let fan = parse::<FanDoc>(input)?.to_fan()?;
    Ok(to_value(&DualComplexDoc::from_complex(&dual_complex(
        &fan,
    )?)))
}
