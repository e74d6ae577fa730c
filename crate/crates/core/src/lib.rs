//! Exact computation of ray ideals, chamber decompositions and fans of
//! maximal ray-ideal cones for multigraded monomial rings, together with
//! multi-section rings of Q-divisors on complete toric varieties.

pub mod chamber;
pub mod error;
pub mod graded;
pub mod poly;
pub mod toric;

pub use error::{FanError, PolyError, RingError, ToricError};
pub use graded::{GradedRingSpec, IdealOrder, Monomial, RayIdeal, RingKind};
