//! Exact normalized volumes, mixed volumes and BKK bounds.
//!
//! All arithmetic is over arbitrary-precision rationals. The crate is split
//! into:
//!
//! - [`geometry`]: points, convex hulls, placing triangulations, normalized
//!   volumes and Minkowski sums;
//! - [`mixed`]: mixed volumes through interchangeable engines selected by
//!   name from an [`mixed::EngineRegistry`];
//! - [`reduction`]: the simplices `Δ(p_i)` whose mixed volume equals the
//!   normalized volume of `conv{p_1, ..., p_m}`;
//! - [`laurent`]: Laurent polynomials, Newton polytopes, Kushnirenko and BKK
//!   bounds, initial forms, and the `F`/`G` system builders.

pub mod error;
pub mod geometry;
mod int;
pub mod laurent;
pub mod linalg;
pub mod lp;
pub mod mixed;
pub mod rational;
pub mod reduction;

pub use error::{Error, Result};
pub use geometry::{ConvexPolytope, Point, PointConfiguration, Simplex};
pub use mixed::{EngineRegistry, MixedVolumeEngine, PolytopeTuple};
pub use rational::Rational;
