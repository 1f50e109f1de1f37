//! JSON documents. Rationals travel as strings such as `"3/2"` or `"-4"`.

use serde::{Deserialize, Serialize};

use crate::divisors::{MonomialIdeal, PshGerm};
use crate::error::{Error, Result};
use crate::geometry::NewtonRegion;
use crate::intersection::AtomicMeasure;
use crate::rational::{parse_rat, Rat, RatVec};
use crate::toric::{DualComplex, Fan, PLFunction};
use crate::valuation::{Polynomial, ShiftedMonomialValuation, TriangularChange};

pub fn rat_str(x: &Rat) -> String {
    x.to_string()
}

pub fn rat_strs(v: &[Rat]) -> Vec<String> {
    v.iter().map(rat_str).collect()
}

pub fn parse_rats(v: &[String]) -> Result<RatVec> {
    v.iter().map(|s| parse_rat(s)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealDoc {
    pub n: usize,
    pub generators: Vec<Vec<u32>>,
}

impl IdealDoc {
    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        if self.n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        if self.generators.is_empty() {
            return Err(Error::Empty("ideal generators"));
        }
        MonomialIdeal::new(self.n, self.generators.iter().cloned())
    }

    pub fn from_ideal(a: &MonomialIdeal) -> Self {
        IdealDoc {
            n: a.dim(),
            generators: a.generators().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorsDoc {
    pub generators: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub c: String,
    pub ideal: IdealDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GermDoc {
    pub terms: Vec<TermDoc>,
}

impl GermDoc {
    pub fn to_germ(&self) -> Result<PshGerm> {
        let Some(first) = self.terms.first() else {
            return Err(Error::Empty("germ terms"));
        };
        let n = first.ideal.n;
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((parse_rat(&t.c)?, t.ideal.to_ideal()?)))
            .collect::<Result<Vec<_>>>()?;
        PshGerm::new(n, terms)
    }

    pub fn from_germ(u: &PshGerm) -> Self {
        GermDoc {
            terms: u
                .terms()
                .iter()
                .map(|(c, a)| TermDoc {
                    c: rat_str(c),
                    ideal: IdealDoc::from_ideal(a),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanDoc {
    pub n: usize,
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
}

impl FanDoc {
    pub fn to_fan(&self) -> Result<Fan> {
        Fan::new(self.n, self.rays.clone(), self.cones.clone())
    }

    pub fn from_fan(f: &Fan) -> Self {
        FanDoc {
            n: f.dim(),
            rays: f.rays().to_vec(),
            cones: f.cones().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionDoc {
    pub n: usize,
    pub generators: Vec<Vec<String>>,
}

impl RegionDoc {
    pub fn from_region(p: &NewtonRegion) -> Self {
        RegionDoc {
            n: p.dim(),
            generators: p.generators().iter().map(|g| rat_strs(g)).collect(),
        }
    }

    pub fn to_region(&self) -> Result<NewtonRegion> {
        let pts = self
            .generators
            .iter()
            .map(|g| parse_rats(g))
            .collect::<Result<Vec<_>>>()?;
        if pts.is_empty() {
            return Err(Error::Empty("region generators"));
        }
        crate::rational::check_dim(self.n, pts[0].len())?;
        NewtonRegion::from_points(&pts)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomDoc {
    pub weights: Vec<String>,
    pub mass: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureDoc {
    pub atoms: Vec<AtomDoc>,
}

impl MeasureDoc {
    pub fn from_measure(mu: &AtomicMeasure) -> Self {
        MeasureDoc {
            atoms: mu
                .atoms()
                .iter()
                .map(|(nu, m)| AtomDoc {
                    weights: rat_strs(nu.weights()),
                    mass: rat_str(m),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyTermDoc {
    pub exp: Vec<u32>,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyDoc {
    pub terms: Vec<PolyTermDoc>,
}

impl PolyDoc {
    pub fn to_poly(&self, n: usize) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.exp.clone(), parse_rat(&t.c)?)))
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(n, terms)
    }
}

/// `{"n", "shifts": [poly…], "weights": […]}`; `shifts` may be omitted or
/// shorter than `n` (missing entries are zero).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuationDoc {
    pub n: usize,
    #[serde(default)]
    pub shifts: Vec<PolyDoc>,
    pub weights: Vec<String>,
}

impl ValuationDoc {
    pub fn to_valuation(&self, cap: u32) -> Result<ShiftedMonomialValuation> {
        if self.shifts.len() > self.n {
            return Err(Error::InvalidArgument("more shifts than variables".into()));
        }
        let mut shifts = self
            .shifts
            .iter()
            .map(|p| p.to_poly(self.n))
            .collect::<Result<Vec<_>>>()?;
        shifts.resize(self.n, Polynomial::zero(self.n));
        let change = TriangularChange::with_cap(shifts, cap)?;
        ShiftedMonomialValuation::new(change, parse_rats(&self.weights)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualComplexDoc {
    pub vertices: Vec<Vec<i64>>,
    pub b: Vec<i64>,
    pub faces: Vec<Vec<usize>>,
}

impl DualComplexDoc {
    pub fn from_complex(d: &DualComplex) -> Self {
        DualComplexDoc {
            vertices: d.vertices().to_vec(),
            b: d.b_values().to_vec(),
            faces: d.faces().to_vec(),
        }
    }
}

/// PL function from values given on the rays of the input document; rays
/// may be listed in any order and need not be primitive.
pub fn pl_from_doc(fan: &FanDoc, values: &[String]) -> Result<PLFunction> {
    crate::rational::check_dim(fan.rays.len(), values.len())?;
    let values = parse_rats(values)?;
    let f = fan.to_fan()?;
    let mut on_fan = Vec::with_capacity(f.rays().len());
    for r in f.rays() {
        let (i, k) = fan
            .rays
            .iter()
            .enumerate()
            .find_map(|(i, u)| {
                let k = u
                    .iter()
                    .zip(r)
                    .find(|(_, p)| **p != 0)
                    .map(|(x, p)| x / p)?;
                (k > 0 && u.iter().zip(r).all(|(x, p)| *x == k * p)).then_some((i, k))
            })
            .expect("every fan ray comes from an input ray");
        on_fan.push(&values[i] / Rat::from_integer(k.into()));
    }
    PLFunction::new(f, on_fan)
}
