//! Exact arithmetic for the algebra `X_d`, the group `Spun(d)` double-covering
//! the proper rigid motions `SE(d)`, and the reduction from distinct distances
//! among points of `Q^d` to intersections of flats.

pub mod blade;
pub mod chart;
pub mod flat;
pub mod lap;
pub mod linalg;
pub mod multivector;
pub mod rational;
pub mod reduction;
pub mod sample;
pub mod spin;
pub mod text;
pub mod verify;

pub use blade::Blade;
pub use multivector::{AlgebraError, Multivector, Subspace};
pub use rational::Rational;
pub use text::parse_multivector;
