//! Monomial ideals, toric formal psh functions and germs `Σ c_i log|a_i|`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::NewtonRegion;
use crate::rational::{check_dim, dot_int, int_vec_to_rat, ExtRat, Rat};
use crate::valuation::{MonomialValuation, Polynomial, Valuation};

/// A monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    dim: usize,
    generators: Vec<Vec<u32>>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl MonomialIdeal {
    /// Minimalizes `gens` under divisibility. An empty list is the zero ideal.
    pub fn new(dim: usize, gens: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        let mut all: Vec<Vec<u32>> = Vec::new();
        for g in gens {
            check_dim(dim, g.len())?;
            all.push(g);
        }
        all.sort();
        all.dedup();
        let minimal = all
            .iter()
            .filter(|g| !all.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .collect();
        Ok(MonomialIdeal {
            dim,
            generators: minimal,
        })
    }

    pub fn unit(dim: usize) -> Self {
        MonomialIdeal {
            dim,
            generators: vec![vec![0; dim]],
        }
    }

    /// `m^k`, generated by all monomials of degree `k`.
    pub fn maximal_power(dim: usize, k: u32) -> Self {
        let mut gens = Vec::new();
        let mut cur = vec![0u32; dim];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(cur.clone());
                return;
            }
            for a in 0..=left {
                cur[i] = a;
                rec(i + 1, left - a, cur, out);
            }
            cur[i] = 0;
        }
        if dim > 0 {
            rec(0, k, &mut cur, &mut gens);
        }
        MonomialIdeal::new(dim, gens).expect("dimensions agree")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.iter().all(|&a| a == 0))
    }

    /// Whether some pure power of every coordinate lies in the ideal.
    pub fn is_primary(&self) -> bool {
        (0..self.dim).all(|i| {
            self.generators
                .iter()
                .any(|g| g.iter().enumerate().all(|(j, &a)| j == i || a == 0))
        })
    }

    pub fn contains_monomial(&self, m: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, m))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        MonomialIdeal::new(
            self.dim,
            self.generators.iter().chain(&other.generators).cloned(),
        )
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        MonomialIdeal::new(self.dim, gens)
    }

    pub fn power(&self, k: u32) -> Self {
        let mut acc = MonomialIdeal::unit(self.dim);
        for _ in 0..k {
            acc = acc.product(self).expect("dimensions agree");
        }
        acc
    }

    /// Generators as polynomials with unit coefficients.
    pub fn generator_polynomials(&self) -> Vec<Polynomial> {
        self.generators
            .iter()
            .map(|g| Polynomial::monomial(g.clone(), Rat::one()))
            .collect()
    }

    /// The Newton region `conv(generators) + R^n_{≥0}`.
    pub fn region(&self) -> Result<NewtonRegion> {
        if self.is_zero() {
            return Err(Error::Empty("zero ideal has no Newton region"));
        }
        NewtonRegion::from_exponents(&self.generators)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let mut first = true;
            for (i, &a) in g.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if a == 1 {
                    write!(f, "x{}", i + 1)?;
                } else {
                    write!(f, "x{}^{a}", i + 1)?;
                }
            }
            if first {
                write!(f, "1")?;
            }
        }
        write!(f, ")")
    }
}

/// `P(a)` for a nonzero monomial ideal.
pub fn region_of(a: &MonomialIdeal) -> Result<NewtonRegion> {
    a.region()
}

/// `ν(a) = min ν(f)` over generators; `+∞` for the zero ideal.
pub fn eval_ideal<V: Valuation + ?Sized>(nu: &V, a: &MonomialIdeal) -> Result<ExtRat> {
    check_dim(nu.dim(), a.dim())?;
    nu.eval_generators(&a.generator_polynomials())
}

/// `ν_w(P) = min_{p ∈ P} ⟨w, p⟩` for a monomial valuation and a region.
pub fn eval_region(nu: &MonomialValuation, p: &NewtonRegion) -> Result<Rat> {
    p.support_value(nu.weights())
}

/// A toric formal psh function, identified with its Newton region:
/// `g(ν_w) = −min_{p ∈ P} ⟨w, p⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalPshToric {
    region: NewtonRegion,
}

impl FormalPshToric {
    pub fn new(region: NewtonRegion) -> Self {
        FormalPshToric { region }
    }

    pub fn zero(dim: usize) -> Self {
        FormalPshToric {
            region: NewtonRegion::trivial(dim),
        }
    }

    pub fn from_ideal(a: &MonomialIdeal) -> Result<Self> {
        Ok(FormalPshToric {
            region: a.region()?,
        })
    }

    pub fn region(&self) -> &NewtonRegion {
        &self.region
    }

    pub fn into_region(self) -> NewtonRegion {
        self.region
    }

    pub fn dim(&self) -> usize {
        self.region.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.region.is_trivial()
    }

    /// `g(ν_w)`.
    pub fn value(&self, w: &[Rat]) -> Result<Rat> {
        Ok(-self.region.support_value(w)?)
    }

    pub fn scale(&self, c: &Rat) -> Result<Self> {
        Ok(FormalPshToric {
            region: self.region.scale(c)?,
        })
    }
}

/// Pointwise maximum; the region of `a + b` from those of `a` and `b`.
pub fn divisor_max(g1: &FormalPshToric, g2: &FormalPshToric) -> Result<FormalPshToric> {
    Ok(FormalPshToric {
        region: g1.region.union_hull(&g2.region)?,
    })
}

/// Pointwise sum; the region of `a·b` from those of `a` and `b`.
pub fn divisor_sum(g1: &FormalPshToric, g2: &FormalPshToric) -> Result<FormalPshToric> {
    Ok(FormalPshToric {
        region: g1.region.minkowski_sum(&g2.region)?,
    })
}

/// `u = Σ c_i log|a_i|` with `c_i > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PshGerm {
    dim: usize,
    terms: Vec<(Rat, MonomialIdeal)>,
}

impl PshGerm {
    pub fn new(dim: usize, terms: Vec<(Rat, MonomialIdeal)>) -> Result<Self> {
        for (c, a) in &terms {
            check_dim(dim, a.dim())?;
            if *c <= Rat::zero() {
                return Err(Error::NonPositive(format!("germ coefficient {c}")));
            }
            if a.is_zero() {
                return Err(Error::Empty("zero ideal in germ"));
            }
        }
        Ok(PshGerm { dim, terms })
    }

    pub fn log_ideal(a: MonomialIdeal) -> Self {
        PshGerm {
            dim: a.dim(),
            terms: vec![(Rat::one(), a)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[(Rat, MonomialIdeal)] {
        &self.terms
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(PshGerm {
            dim: self.dim,
            terms,
        })
    }

    /// `û(ν_w) = −Σ c_i ν_w(a_i)`.
    pub fn transform_value(&self, w: &[Rat]) -> Result<Rat> {
        Ok(-kiselman(self, w)?)
    }
}

/// `û` as a toric formal psh function: region `Σ c_i P(a_i)`.
pub fn transform(u: &PshGerm) -> Result<FormalPshToric> {
    let mut region = NewtonRegion::trivial(u.dim);
    for (c, a) in &u.terms {
        region = region.minkowski_sum(&a.region()?.scale(c)?)?;
    }
    Ok(FormalPshToric { region })
}

/// The Kiselman number `Σ c_i ν_w(a_i)` of `u` with weight `w`.
pub fn kiselman(u: &PshGerm, w: &[Rat]) -> Result<Rat> {
    check_dim(u.dim, w.len())?;
    let nu = MonomialValuation::new(w.to_vec())?;
    let mut total = Rat::zero();
    for (c, a) in &u.terms {
        let v = a
            .generators()
            .iter()
            .map(|g| dot_int(nu.weights(), g))
            .min()
            .expect("ideal is nonzero");
        total += c * v;
    }
    Ok(total)
}

/// The Lelong number `Σ c_i ν_m(a_i)`.
pub fn lelong_number(u: &PshGerm) -> Result<Rat> {
    kiselman(u, &vec![Rat::one(); u.dim])
}

/// Region points of a generator list, as rationals.
pub fn exponent_points(a: &MonomialIdeal) -> Vec<crate::rational::RatVec> {
    a.generators().iter().map(|g| int_vec_to_rat(g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_vec, ratio};

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        let n = gens[0].len();
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec())).unwrap()
    }

    fn region(gens: &[&[i64]]) -> NewtonRegion {
        NewtonRegion::from_points(&gens.iter().map(|g| rat_vec(g)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn minimal_generators() {
        let a = ideal(&[&[2, 0], &[1, 1], &[3, 0], &[2, 5], &[0, 5]]);
        assert_eq!(a.generators(), &[vec![0, 5], vec![1, 1], vec![2, 0]]);
        assert_eq!(MonomialIdeal::maximal_power(2, 2).generators().len(), 3);
        assert_eq!(MonomialIdeal::maximal_power(3, 2).generators().len(), 6);
    }

    #[test]
    fn primary_examples() {
        assert!(ideal(&[&[1, 0], &[0, 2]]).is_primary());
        assert!(!ideal(&[&[1, 1]]).is_primary());
        assert!(ideal(&[&[2, 0], &[1, 1], &[0, 5]]).is_primary());
    }

    #[test]
    fn region_of_examples() {
        assert_eq!(
            region_of(&ideal(&[&[1, 0], &[0, 1]])).unwrap(),
            region(&[&[1, 0], &[0, 1]])
        );
        assert_eq!(
            region_of(&ideal(&[&[2, 0], &[0, 3]])).unwrap(),
            region(&[&[2, 0], &[0, 3]])
        );
        let r = region_of(&ideal(&[&[1, 1]])).unwrap();
        assert_eq!(r, region(&[&[1, 1]]));
        assert!(!r.is_primary());
    }

    #[test]
    fn eval_ideal_examples() {
        let nu = MonomialValuation::new(rat_vec(&[2, 1])).unwrap();
        assert_eq!(
            eval_ideal(&nu, &ideal(&[&[1, 0], &[0, 2]])).unwrap(),
            ExtRat::Finite(rat(2))
        );
        let a = ideal(&[&[2, 0], &[0, 3]]);
        let m = MonomialValuation::multiplicity(2);
        assert_eq!(eval_ideal(&m, &a).unwrap(), ExtRat::Finite(rat(2)));
        let nu = MonomialValuation::new(vec![ratio(3, 2), rat(1)]).unwrap();
        assert_eq!(eval_ideal(&nu, &a).unwrap(), ExtRat::Finite(rat(3)));
        assert_eq!(eval_region(&nu, &a.region().unwrap()).unwrap(), rat(3));
    }

    #[test]
    fn transform_examples() {
        let u = PshGerm::log_ideal(ideal(&[&[2, 0], &[0, 3]]));
        let g = transform(&u).unwrap();
        assert_eq!(g.region(), &region(&[&[2, 0], &[0, 3]]));
        assert_eq!(g.value(&rat_vec(&[1, 1])).unwrap(), rat(-2));

        let m = ideal(&[&[1, 0], &[0, 1]]);
        let u = PshGerm::new(2, vec![(rat(2), m.clone())]).unwrap();
        let g = transform(&u).unwrap();
        assert_eq!(g.region(), &region(&[&[2, 0], &[0, 2]]));
        assert_eq!(g.value(&rat_vec(&[2, 1])).unwrap(), rat(-2));

        let u = PshGerm::log_ideal(ideal(&[&[1, 0], &[0, 2]]))
            .concat(&PshGerm::log_ideal(m))
            .unwrap();
        let g = transform(&u).unwrap();
        assert_eq!(g.region(), &region(&[&[2, 0], &[1, 1], &[0, 3]]));
        assert_eq!(g.value(&rat_vec(&[2, 1])).unwrap(), rat(-3));
        assert_eq!(u.transform_value(&rat_vec(&[2, 1])).unwrap(), rat(-3));
    }

    #[test]
    fn kiselman_examples() {
        let u = PshGerm::log_ideal(ideal(&[&[2, 0], &[0, 3]]));
        assert_eq!(kiselman(&u, &rat_vec(&[1, 1])).unwrap(), rat(2));
        assert_eq!(kiselman(&u, &[ratio(3, 2), rat(1)]).unwrap(), rat(3));
        let u = PshGerm::new(2, vec![(rat(2), ideal(&[&[1, 0], &[0, 1]]))]).unwrap();
        assert_eq!(kiselman(&u, &rat_vec(&[2, 1])).unwrap(), rat(2));
        assert!(kiselman(&u, &rat_vec(&[1])).is_err());
    }

    #[test]
    fn lelong_examples() {
        let u = PshGerm::log_ideal(ideal(&[&[2, 0], &[0, 3]]));
        assert_eq!(lelong_number(&u).unwrap(), rat(2));
        let u = PshGerm::new(2, vec![(ratio(5, 3), ideal(&[&[1, 0], &[0, 1]]))]).unwrap();
        assert_eq!(lelong_number(&u).unwrap(), ratio(5, 3));
        let u = PshGerm::log_ideal(ideal(&[&[1, 0], &[0, 2]]));
        assert_eq!(lelong_number(&u).unwrap(), rat(1));
    }

    #[test]
    fn max_and_sum() {
        let gx = FormalPshToric::from_ideal(&ideal(&[&[2, 0]])).unwrap();
        let gy = FormalPshToric::from_ideal(&ideal(&[&[0, 3]])).unwrap();
        let both = FormalPshToric::from_ideal(&ideal(&[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(divisor_max(&gx, &gy).unwrap(), both);
        assert_eq!(divisor_max(&both, &both).unwrap(), both);
        let zero = FormalPshToric::zero(2);
        assert_eq!(divisor_max(&both, &zero).unwrap(), zero);
        let s = divisor_sum(&gx, &gy).unwrap();
        assert_eq!(s.value(&rat_vec(&[1, 1])).unwrap(), rat(-5));
        assert_eq!(
            divisor_sum(&both, &zero)
                .unwrap()
                .value(&rat_vec(&[1, 1]))
                .unwrap(),
            rat(-2)
        );
    }
}
