//! Exact rational scalars and vectors.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always kept in lowest terms.
pub type Rat = BigRational;

/// A vector of rationals of a fixed ambient length.
pub type RatVec = Vec<Rat>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_vec(entries: &[i64]) -> RatVec {
    entries.iter().map(|&x| rat(x)).collect()
}

pub fn int_vec_to_rat(entries: &[u32]) -> RatVec {
    entries.iter().map(|&x| rat(i64::from(x))).collect()
}

/// Parses `"p/q"` or `"p"`; the result is reduced.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    Rat::from_str(t).map_err(|_| Error::Parse(format!("not a rational: {s:?}")))
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_int(a: &[Rat], m: &[u32]) -> Rat {
    a.iter().zip(m).fold(Rat::zero(), |acc, (x, &y)| {
        acc + x * Rat::from_integer(BigInt::from(y))
    })
}

pub fn scale_vec(v: &[Rat], c: &Rat) -> RatVec {
    v.iter().map(|x| x * c).collect()
}

pub fn add_vec(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn sum(v: &[Rat]) -> Rat {
    v.iter().fold(Rat::zero(), |acc, x| acc + x)
}

pub fn min_entry(v: &[Rat]) -> Option<Rat> {
    v.iter().min().cloned()
}

pub fn max_entry(v: &[Rat]) -> Option<Rat> {
    v.iter().max().cloned()
}

/// Least common multiple of the denominators.
pub fn common_denominator(v: &[Rat]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Scales a nonzero rational vector to the primitive integer vector on the
/// same ray. The zero vector maps to itself.
pub fn primitive_integer(v: &[Rat]) -> Vec<BigInt> {
    let den = common_denominator(v);
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn primitive_i64(v: &[Rat]) -> Result<Vec<i64>> {
    primitive_integer(v)
        .iter()
        .map(|x| x.to_i64().ok_or(Error::Overflow))
        .collect()
}

pub fn floor_to_i64(x: &Rat) -> Result<i64> {
    x.floor().to_integer().to_i64().ok_or(Error::Overflow)
}

pub fn ceil_to_i64(x: &Rat) -> Result<i64> {
    x.ceil().to_integer().to_i64().ok_or(Error::Overflow)
}

pub fn is_nonnegative(v: &[Rat]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

pub fn is_positive(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_positive())
}

pub fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// A rational extended by `+∞`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtRat {
    Finite(Rat),
    Infinity,
}

impl ExtRat {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            ExtRat::Finite(x) => Some(x),
            ExtRat::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRat::Infinity)
    }

    pub fn add(&self, other: &ExtRat) -> ExtRat {
        match (self, other) {
            (ExtRat::Finite(a), ExtRat::Finite(b)) => ExtRat::Finite(a + b),
            _ => ExtRat::Infinity,
        }
    }
}

impl From<Rat> for ExtRat {
    fn from(x: Rat) -> Self {
        ExtRat::Finite(x)
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Finite(x) => write!(f, "{x}"),
            ExtRat::Infinity => write!(f, "inf"),
        }
    }
}
