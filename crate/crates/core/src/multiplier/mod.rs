//! Multiplier ideals of toric formal psh functions and the statements
//! relating them to the function.

pub mod checks;
pub mod envelope;
pub mod ideals;

pub use checks::{
    approx_check, bounded_approximation, decreasing_approximation, decreasing_check,
    els_approx_check, subadditivity_check, tameness_bound, tameness_constant, ApproxReport,
    DecreasingReport, ElsReport, TamenessReport,
};
pub use envelope::nef_envelope;
pub use ideals::{
    jumping_ladder, l2_ideal, l2_ideal_scaled, lct, linf_ideal, linf_ideal_scaled, JumpingLadder,
};
