//! Exact rational linear algebra and the polyhedral-cone kernel.

pub mod cone;
pub mod lp;
pub mod matrix;
pub mod snf;
pub mod vector;

pub use cone::{Face, RationalCone};
pub use lp::{lp_feasible, maximize, LinearConstraint, LpOutcome, Relation};
pub use matrix::IntMatrix;
pub use snf::{cokernel, smith_normal_form, AbelianGroup, SnfResult};
pub use vector::{IntVec, Rat, RatVec};
