//! Monomial and shifted monomial valuations, their retraction and homotopy.

pub mod homotopy;
pub mod monomial;
pub mod polynomial;

pub use homotopy::{homotopy_eval, HomotopyProfile};
pub use monomial::{
    b_value, monomial_retraction, MonomialValuation, ShiftedMonomialValuation, TriangularChange,
    Valuation, DEFAULT_DEGREE_CAP,
};
pub use polynomial::Polynomial;
