pub mod cli;
pub mod divisors;
pub mod error;
pub mod geometry;
pub mod intersection;
pub mod multiplier;
pub mod rational;
pub mod sampling;
pub mod toric;
pub mod valuation;

pub use divisors::{FormalPshToric, MonomialIdeal, PshGerm};
pub use error::{Error, Result};
pub use geometry::{BoundedPolytope, Halfspace, NewtonRegion};
pub use rational::{ExtRat, Rat, RatVec};
pub use valuation::{MonomialValuation, Polynomial, ShiftedMonomialValuation, TriangularChange};
