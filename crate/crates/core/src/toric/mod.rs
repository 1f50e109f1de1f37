//! Toric models: fans refining the orthant, PL functions, dual complexes.

pub mod cone;
pub mod dual;
pub mod fan;
pub mod pl;

pub use cone::{Cone, Ray};
pub use dual::{dual_complex, retract_check, DualComplex};
pub use fan::{common_refinement, fan_with_rays, normal_fan_refinement, star_subdivision, Fan};
pub use pl::{pl_from_region, PLFunction};
