//! Monomial and shifted monomial valuations.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{check_dim, dot_int, min_entry, primitive_integer, ExtRat, Rat, RatVec};
use crate::valuation::polynomial::Polynomial;

/// Default cap on total degree during coordinate rewriting.
pub const DEFAULT_DEGREE_CAP: u32 = 64;

/// Common interface of the valuations that can be evaluated exactly.
pub trait Valuation {
    fn dim(&self) -> usize;

    /// `ν(f)`, with `+∞` exactly when `f = 0`.
    fn eval_poly(&self, f: &Polynomial) -> Result<ExtRat>;

    /// The values `ν(x_1), …, ν(x_n)`.
    fn coordinate_values(&self) -> Result<RatVec> {
        let n = self.dim();
        (0..n)
            .map(|i| match self.eval_poly(&Polynomial::variable(n, i))? {
                ExtRat::Finite(v) => Ok(v),
                ExtRat::Infinity => unreachable!("x_i is nonzero"),
            })
            .collect()
    }

    /// `ν` of the ideal generated by `gens`.
    fn eval_generators(&self, gens: &[Polynomial]) -> Result<ExtRat> {
        let mut best = ExtRat::Infinity;
        for g in gens {
            let v = self.eval_poly(g)?;
            if v < best {
                best = v;
            }
        }
        Ok(best)
    }
}

/// `ν_w(Σ a_α x^α) = min ⟨w, α⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialValuation {
    weights: RatVec,
}

impl MonomialValuation {
    pub fn new(weights: RatVec) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Empty("weight vector"));
        }
        if let Some(w) = weights.iter().find(|w| **w <= Rat::zero()) {
            return Err(Error::NonPositive(format!("weight {w}")));
        }
        Ok(MonomialValuation { weights })
    }

    /// The order of vanishing at the origin, `w = (1, …, 1)`.
    pub fn multiplicity(n: usize) -> Self {
        MonomialValuation {
            weights: vec![Rat::one(); n],
        }
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    pub fn into_weights(self) -> RatVec {
        self.weights
    }

    /// `ν(m) = min_i w_i`.
    pub fn center_value(&self) -> Rat {
        min_entry(&self.weights).expect("weights are nonempty")
    }

    pub fn is_normalized(&self) -> bool {
        self.center_value().is_one()
    }

    /// Divide by `λ = min_i w_i`; returns the normalized valuation and `λ`.
    pub fn normalize(&self) -> (MonomialValuation, Rat) {
        let lambda = self.center_value();
        let weights = self.weights.iter().map(|w| w / &lambda).collect();
        (MonomialValuation { weights }, lambda)
    }

    pub fn eval_monomial(&self, alpha: &[u32]) -> Result<Rat> {
        check_dim(self.weights.len(), alpha.len())?;
        Ok(dot_int(&self.weights, alpha))
    }

    /// Primitive integer vector on the ray of `w`.
    pub fn primitive_weights(&self) -> Vec<num_bigint::BigInt> {
        primitive_integer(&self.weights)
    }

    /// `ν(m)` for the divisorial valuation on the ray of `w`, i.e. the least
    /// entry of the primitive integer vector.
    pub fn b_value(&self) -> num_bigint::BigInt {
        b_value(&self.primitive_weights())
    }

    /// `A(ν_w) = Σ w_i`.
    pub fn thinness(&self) -> Rat {
        self.weights.iter().sum()
    }

    /// `max_i w_i / min_i w_i`: the constant `C` with `C·g(ν_m) ≤ g(ν) ≤ g(ν_m)`.
    pub fn izumi_constant(&self) -> Rat {
        let (n, _) = self.normalize();
        crate::rational::max_entry(&n.weights).expect("weights are nonempty")
    }
}

impl Valuation for MonomialValuation {
    fn dim(&self) -> usize {
        self.weights.len()
    }

    fn eval_poly(&self, f: &Polynomial) -> Result<ExtRat> {
        check_dim(self.weights.len(), f.dim())?;
        Ok(f.support()
            .map(|a| dot_int(&self.weights, a))
            .min()
            .map_or(ExtRat::Infinity, ExtRat::Finite))
    }

    fn coordinate_values(&self) -> Result<RatVec> {
        Ok(self.weights.clone())
    }
}

impl fmt::Display for MonomialValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "nu(")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// Least entry of a primitive integer weight vector.
pub fn b_value(e: &[num_bigint::BigInt]) -> num_bigint::BigInt {
    e.iter().min().cloned().unwrap_or_default()
}

/// Coordinates `z_1 = x_1`, `z_i = x_i − p_i(x_1, …, x_{i−1})` with `p_i(0) = 0`.
///
/// The map is a polynomial automorphism fixing the origin with Jacobian 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TriangularChange {
    shifts: Vec<Polynomial>,
    /// `x_i` written in `z`-coordinates.
    inverse: Vec<Polynomial>,
    cap: u32,
}

impl TriangularChange {
    pub fn identity(n: usize) -> Self {
        Self::new(vec![Polynomial::zero(n); n]).expect("identity is valid")
    }

    pub fn new(shifts: Vec<Polynomial>) -> Result<Self> {
        Self::with_cap(shifts, DEFAULT_DEGREE_CAP)
    }

    pub fn with_cap(shifts: Vec<Polynomial>, cap: u32) -> Result<Self> {
        let n = shifts.len();
        if n == 0 {
            return Err(Error::Empty("coordinate change"));
        }
        for (i, p) in shifts.iter().enumerate() {
            check_dim(n, p.dim())?;
            if !p.coefficient(&vec![0; n]).is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "shift p_{} must vanish at the origin",
                    i + 1
                )));
            }
            if (i..n).any(|j| p.uses_variable(j)) {
                return Err(Error::InvalidArgument(format!(
                    "shift p_{} may only involve x_1..x_{}",
                    i + 1,
                    i
                )));
            }
            if p.total_degree() > cap {
                return Err(Error::DegreeOverflow {
                    degree: p.total_degree(),
                    cap,
                });
            }
        }
        let mut inverse: Vec<Polynomial> = Vec::with_capacity(n);
        for (i, p) in shifts.iter().enumerate() {
            let mut args = inverse.clone();
            args.extend((i..n).map(|j| Polynomial::variable(n, j)));
            let xi = &Polynomial::variable(n, i) + &p.compose(&args, cap)?;
            inverse.push(xi);
        }
        Ok(TriangularChange {
            shifts,
            inverse,
            cap,
        })
    }

    pub fn dim(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[Polynomial] {
        &self.shifts
    }

    pub fn degree_cap(&self) -> u32 {
        self.cap
    }

    pub fn is_identity(&self) -> bool {
        self.shifts.iter().all(Polynomial::is_zero)
    }

    /// `f` rewritten in `z`-coordinates.
    pub fn rewrite(&self, f: &Polynomial) -> Result<Polynomial> {
        check_dim(self.dim(), f.dim())?;
        if self.is_identity() {
            return Ok(f.clone());
        }
        f.compose(&self.inverse, self.cap)
    }
}

/// A monomial valuation in the coordinates of a [`TriangularChange`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftedMonomialValuation {
    change: TriangularChange,
    monomial: MonomialValuation,
}

impl ShiftedMonomialValuation {
    pub fn new(change: TriangularChange, weights: RatVec) -> Result<Self> {
        check_dim(change.dim(), weights.len())?;
        Ok(ShiftedMonomialValuation {
            change,
            monomial: MonomialValuation::new(weights)?,
        })
    }

    pub fn change(&self) -> &TriangularChange {
        &self.change
    }

    /// The weights in `z`-coordinates.
    pub fn weights(&self) -> &[Rat] {
        self.monomial.weights()
    }

    pub fn as_monomial_in_z(&self) -> &MonomialValuation {
        &self.monomial
    }

    /// `Σ w_i`; no Jacobian correction is needed for triangular changes.
    pub fn thinness(&self) -> Rat {
        self.monomial.thinness()
    }

    pub fn center_value(&self) -> Result<Rat> {
        Ok(min_entry(&self.coordinate_values()?).expect("weights are nonempty"))
    }

    pub fn normalize(&self) -> Result<(ShiftedMonomialValuation, Rat)> {
        let lambda = self.center_value()?;
        let weights = self.weights().iter().map(|w| w / &lambda).collect();
        Ok((
            ShiftedMonomialValuation::new(self.change.clone(), weights)?,
            lambda,
        ))
    }
}

impl Valuation for ShiftedMonomialValuation {
    fn dim(&self) -> usize {
        self.change.dim()
    }

    fn eval_poly(&self, f: &Polynomial) -> Result<ExtRat> {
        let g = self.change.rewrite(f)?;
        self.monomial.eval_poly(&g)
    }
}

/// `r(ν)`: the monomial valuation with weights `(ν(x_1), …, ν(x_n))`.
pub fn monomial_retraction<V: Valuation + ?Sized>(nu: &V) -> Result<MonomialValuation> {
    MonomialValuation::new(nu.coordinate_values()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn mv(w: &[Rat]) -> MonomialValuation {
        MonomialValuation::new(w.to_vec()).unwrap()
    }

    pub(crate) fn parabola_shift(w: [i64; 2]) -> ShiftedMonomialValuation {
        let p2 = Polynomial::monomial(vec![2, 0], rat(1));
        let change = TriangularChange::new(vec![Polynomial::zero(2), p2]).unwrap();
        ShiftedMonomialValuation::new(change, vec![rat(w[0]), rat(w[1])]).unwrap()
    }

    fn poly(terms: &[(&[u32], i64)]) -> Polynomial {
        let n = terms[0].0.len();
        Polynomial::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), rat(*c)))).unwrap()
    }

    #[test]
    fn eval_monomial_valuation() {
        let f = poly(&[(&[2, 0], 1), (&[0, 3], 1)]);
        assert_eq!(
            mv(&[rat(1), rat(1)]).eval_poly(&f).unwrap(),
            ExtRat::Finite(rat(2))
        );
        assert_eq!(
            mv(&[rat(1), rat(1)])
                .eval_poly(&Polynomial::zero(2))
                .unwrap(),
            ExtRat::Infinity
        );
        assert!(matches!(
            mv(&[rat(1)]).eval_poly(&f),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn eval_shifted_valuation() {
        let nu = parabola_shift([1, 3]);
        let y = Polynomial::variable(2, 1);
        assert_eq!(nu.eval_poly(&y).unwrap(), ExtRat::Finite(rat(2)));
        let f = poly(&[(&[0, 1], 1), (&[2, 0], -1)]);
        assert_eq!(nu.eval_poly(&f).unwrap(), ExtRat::Finite(rat(3)));
        assert_eq!(
            nu.eval_poly(&Polynomial::zero(2)).unwrap(),
            ExtRat::Infinity
        );
    }

    #[test]
    fn normalize_examples() {
        let (n, l) = mv(&[rat(4), rat(2)]).normalize();
        assert_eq!(n.weights(), &[rat(2), rat(1)]);
        assert_eq!(l, rat(2));
        let (n, l) = mv(&[rat(1), rat(1)]).normalize();
        assert_eq!(n.weights(), &[rat(1), rat(1)]);
        assert_eq!(l, rat(1));
        let (n, l) = mv(&[rat(3), rat(2)]).normalize();
        assert_eq!(n.weights(), &[ratio(3, 2), rat(1)]);
        assert_eq!(l, rat(2));
        assert!(MonomialValuation::new(vec![rat(0), rat(1)]).is_err());
        assert!(MonomialValuation::new(vec![rat(-1), rat(1)]).is_err());
    }

    #[test]
    fn b_value_examples() {
        use num_bigint::BigInt;
        assert_eq!(mv(&[rat(3), rat(2)]).b_value(), BigInt::from(2));
        assert_eq!(mv(&[rat(1), rat(1)]).b_value(), BigInt::from(1));
        assert_eq!(mv(&[rat(1), rat(2), rat(5)]).b_value(), BigInt::from(1));
        assert_eq!(mv(&[ratio(3, 2), rat(1)]).b_value(), BigInt::from(2));
    }

    #[test]
    fn thinness_examples() {
        assert_eq!(MonomialValuation::multiplicity(3).thinness(), rat(3));
        assert_eq!(mv(&[rat(2), rat(1)]).thinness(), rat(3));
        assert_eq!(mv(&[ratio(3, 2), rat(1)]).thinness(), ratio(5, 2));
        assert_eq!(parabola_shift([1, 3]).thinness(), rat(4));
    }

    #[test]
    fn izumi_examples() {
        assert_eq!(mv(&[rat(1), rat(1)]).izumi_constant(), rat(1));
        assert_eq!(mv(&[rat(2), rat(1)]).izumi_constant(), rat(2));
        assert_eq!(mv(&[ratio(3, 2), rat(1)]).izumi_constant(), ratio(3, 2));
    }

    #[test]
    fn retraction_examples() {
        assert_eq!(
            monomial_retraction(&parabola_shift([1, 3])).unwrap(),
            mv(&[rat(1), rat(2)])
        );
        assert_eq!(
            monomial_retraction(&parabola_shift([1, 1])).unwrap(),
            mv(&[rat(1), rat(1)])
        );
        let m = mv(&[rat(2), rat(1)]);
        assert_eq!(monomial_retraction(&m).unwrap(), m);
    }

    #[test]
    fn triangular_change_validation() {
        let bad_const = Polynomial::constant(2, rat(1));
        assert!(TriangularChange::new(vec![Polynomial::zero(2), bad_const]).is_err());
        let bad_var = Polynomial::variable(2, 1);
        assert!(TriangularChange::new(vec![Polynomial::zero(2), bad_var]).is_err());
        let deep = Polynomial::monomial(vec![10, 0], rat(1));
        let change = TriangularChange::with_cap(vec![Polynomial::zero(2), deep], 20).unwrap();
        let y = Polynomial::variable(2, 1);
        assert!(change.rewrite(&y.checked_pow(2, 64).unwrap()).is_ok());
        assert!(matches!(
            change.rewrite(&y.checked_pow(3, 64).unwrap()),
            Err(Error::DegreeOverflow { .. })
        ));
    }

    #[test]
    fn three_dimensional_change_composes() {
        // z2 = y - x, z3 = w - y^2, so w = z3 + (z2 + z1)^2.
        let p2 = Polynomial::variable(3, 0);
        let p3 = Polynomial::monomial(vec![0, 2, 0], rat(1));
        let change = TriangularChange::new(vec![Polynomial::zero(3), p2, p3]).unwrap();
        let nu = ShiftedMonomialValuation::new(change, vec![rat(1), rat(2), rat(5)]).unwrap();
        assert_eq!(
            nu.coordinate_values().unwrap(),
            vec![rat(1), rat(1), rat(2)]
        );
    }
}
