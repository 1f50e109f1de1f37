//! Intersection numbers, Monge-Ampère measures and relative types.

pub mod ma;
pub mod mixed;
pub mod relative;

pub use ma::{generalized_lelong, monge_ampere, AtomicMeasure};
pub use mixed::{
    intersection, mixed_multiplicity, mixed_multiplicity_inclusion_exclusion, multiplicity,
    IntersectionNumber,
};
pub use relative::{
    extremal_weight_region, relative_type, relative_type_by_containment, separating_weights,
    theorem_a_check, TheoremAReport,
};
