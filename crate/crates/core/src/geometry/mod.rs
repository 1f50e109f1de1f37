//! Exact rational linear algebra and convex polyhedral geometry.

pub mod hull;
pub mod linalg;
pub mod polytope;
pub mod region;

pub use hull::Halfspace;
pub use polytope::BoundedPolytope;
pub use region::NewtonRegion;
