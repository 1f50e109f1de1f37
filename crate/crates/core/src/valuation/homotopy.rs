//! The deformation `h_s` of a valuation onto its monomial retraction.
//!
//! `h_s(ν)(f) = min_β [ν(D_β f) + |β|·s]` over `β` below the support of `f`,
//! where `D_β f = Σ_{α ≥ β} C(α, β) a_α x^α`. This is the Gauss extension of
//! `ν` with weight `s` on new variables `z_i`, evaluated at `x_i(1 + z_i)`, so
//! every `h_s(ν)` is a valuation. At `s = 0` this is `r(ν)(f)`; for large `s`
//! it is `ν(f)`.
//!
//! Plain truncation without the binomial weights is not additive: with
//! `ν(x) = ν(y) = 1`, `ν(y - x) = 3`, `f = xy`, `g = y - x` it gives
//! `h_1(fg) = 5` against `h_1(f) + h_1(g) = 4`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{ExtRat, Rat};
use crate::valuation::monomial::Valuation;
use crate::valuation::polynomial::Polynomial;

/// The affine functions `s ↦ ν(D_β f) + |β|·s` whose minimum is `h_s(ν)(f)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyProfile {
    /// `(ν(D_β f), |β|)`, one entry per distinct pair.
    lines: Vec<(Rat, u32)>,
    value: Rat,
}

impl HomotopyProfile {
    pub fn new<V: Valuation + ?Sized>(nu: &V, f: &Polynomial) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::InvalidArgument(
                "homotopy is undefined on the zero polynomial".into(),
            ));
        }
        let mut betas = BTreeSet::new();
        for alpha in f.support() {
            down_set(alpha, &mut betas);
        }
        let mut lines = BTreeSet::new();
        for beta in &betas {
            let t = binomial_truncation(f, beta);
            let v = match nu.eval_poly(&t)? {
                ExtRat::Finite(v) => v,
                ExtRat::Infinity => unreachable!("truncation keeps some term"),
            };
            lines.insert((v, beta.iter().sum::<u32>()));
        }
        let value = lines
            .iter()
            .find(|(_, d)| *d == 0)
            .map(|(v, _)| v.clone())
            .expect("beta = 0 is always present");
        Ok(HomotopyProfile {
            lines: lines.into_iter().collect(),
            value,
        })
    }

    pub fn lines(&self) -> &[(Rat, u32)] {
        &self.lines
    }

    /// `ν(f)`, the value for all large `s`.
    pub fn limit(&self) -> &Rat {
        &self.value
    }

    pub fn eval(&self, s: &Rat) -> Result<Rat> {
        if *s < Rat::zero() {
            return Err(Error::InvalidArgument(format!("negative parameter {s}")));
        }
        Ok(self
            .lines
            .iter()
            .map(|(v, d)| v + s * Rat::from_integer((*d).into()))
            .min()
            .expect("profile is nonempty"))
    }

    /// Least `s* ≥ 0` with `h_s = ν(f)` for every `s ≥ s*`.
    pub fn threshold(&self) -> Rat {
        self.lines
            .iter()
            .filter(|(v, d)| *d > 0 && *v < self.value)
            .map(|(v, d)| (&self.value - v) / Rat::from_integer((*d).into()))
            .max()
            .unwrap_or_else(Rat::zero)
    }
}

/// `Σ_{α ≥ β} C(α, β) a_α x^α`, nonzero whenever `β` lies below the support.
fn binomial_truncation(f: &Polynomial, beta: &[u32]) -> Polynomial {
    let mut out = Polynomial::zero(f.dim());
    for (alpha, c) in f.terms() {
        if alpha.iter().zip(beta).all(|(a, b)| a >= b) {
            let weight: BigInt = alpha
                .iter()
                .zip(beta)
                .map(|(&a, &b)| binomial(BigInt::from(a), BigInt::from(b)))
                .product();
            out.add_term(alpha.clone(), c * Rat::from_integer(weight));
        }
    }
    out
}

fn down_set(alpha: &[u32], out: &mut BTreeSet<Vec<u32>>) {
    let mut beta = vec![0u32; alpha.len()];
    loop {
        out.insert(beta.clone());
        let mut i = 0;
        loop {
            if i == alpha.len() {
                return;
            }
            if beta[i] < alpha[i] {
                beta[i] += 1;
                break;
            }
            beta[i] = 0;
            i += 1;
        }
    }
}

/// `h_s(ν)(f)` for `s ≥ 0`.
pub fn homotopy_eval<V: Valuation + ?Sized>(nu: &V, f: &Polynomial, s: &Rat) -> Result<Rat> {
    if *s < Rat::zero() {
        return Err(Error::InvalidArgument(format!("negative parameter {s}")));
    }
    HomotopyProfile::new(nu, f)?.eval(s)
}
