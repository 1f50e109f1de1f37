//! Sparse multivariate polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{check_dim, Rat};

/// `f = Σ a_α x^α`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rat) -> Self {
        Self::monomial(vec![0; dim], c)
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rat::one())
    }

    pub fn monomial(exp: Vec<u32>, c: Rat) -> Self {
        let dim = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Polynomial { dim, terms }
    }

    /// The coordinate function `x_i`.
    pub fn variable(dim: usize, i: usize) -> Self {
        let mut e = vec![0; dim];
        e[i] = 1;
        Self::monomial(e, Rat::one())
    }

    pub fn from_terms(
        dim: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Rat)>,
    ) -> Result<Self> {
        let mut p = Self::zero(dim);
        for (e, c) in terms {
            check_dim(dim, e.len())?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: &[u32]) -> Rat {
        self.terms.get(exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Coordinates `x_j` that actually occur.
    pub fn uses_variable(&self, j: usize) -> bool {
        self.terms.keys().any(|e| e[j] > 0)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Truncation `T_β f = Σ_{α ≥ β} a_α x^α`.
    pub fn truncate_above(&self, beta: &[u32]) -> Self {
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().zip(beta).all(|(a, b)| a >= b))
                .map(|(e, a)| (e.clone(), a.clone()))
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &Self, cap: u32) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let degree = self.total_degree() + other.total_degree();
        if !self.is_zero() && !other.is_zero() && degree > cap {
            return Err(Error::DegreeOverflow { degree, cap });
        }
        Ok(self * other)
    }

    pub fn checked_pow(&self, k: u32, cap: u32) -> Result<Self> {
        let mut acc = Self::one(self.dim);
        for _ in 0..k {
            acc = acc.checked_mul(self, cap)?;
        }
        Ok(acc)
    }

    /// `f(q_1, …, q_n)` for polynomials `q_i` in a common dimension.
    pub fn compose(&self, args: &[Polynomial], cap: u32) -> Result<Self> {
        check_dim(self.dim, args.len())?;
        let out_dim = args.first().map_or(0, |q| q.dim);
        let mut powers: Vec<Vec<Polynomial>> =
            args.iter().map(|q| vec![Self::one(q.dim)]).collect();
        let mut out = Self::zero(out_dim);
        for (exp, c) in &self.terms {
            let mut term = Self::constant(out_dim, c.clone());
            for (i, &k) in exp.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().checked_mul(&args[i], cap)?;
                    powers[i].push(next);
                }
                term = term.checked_mul(&powers[i][k as usize], cap)?;
            }
            out = &out + &term;
        }
        Ok(out)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Rat::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, p) in e.iter().enumerate() {
                if *p > 0 {
                    write!(f, "*x{}^{p}", i + 1)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn arithmetic_cancels_terms() {
        let x = Polynomial::variable(2, 0);
        let y = Polynomial::variable(2, 1);
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p.len(), 2);
        assert_eq!(p.coefficient(&[2, 0]), rat(1));
        assert_eq!(p.coefficient(&[0, 2]), rat(-1));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn composition_and_truncation() {
        // f = y, substitute y -> y + x^2
        let x = Polynomial::variable(2, 0);
        let y = Polynomial::variable(2, 1);
        let shifted = &y + &(&x * &x);
        let f = Polynomial::variable(2, 1);
        let g = f.compose(&[x.clone(), shifted], 64).unwrap();
        assert_eq!(g.len(), 2);
        let t = g.truncate_above(&[1, 0]);
        assert_eq!(t, Polynomial::monomial(vec![2, 0], rat(1)));
    }

    #[test]
    fn degree_cap_is_enforced() {
        let x = Polynomial::variable(1, 0);
        assert!(matches!(
            x.checked_pow(10, 5),
            Err(Error::DegreeOverflow { .. })
        ));
    }
}
