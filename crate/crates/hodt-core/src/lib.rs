//! Higher-order Delaunay triangulations of planar point sets.
//!
//! A triangulation is *order-k Delaunay* if the circumcircle of every triangle
//! contains at most `k` input points. This crate computes exact combinatorial
//! quantities over that class: flippable quadrilaterals and the exact `2^q`
//! count of order-1 triangulations, useful orders of edges via witness
//! triangles, edge hulls and greedy lower-bound certificates, exhaustive
//! triangulation censuses for small sets, extremal point-set generators, and
//! the numerical constants governing the expected number of useful edges on
//! uniform random points.
//!
//! All geometric classifications go through exact predicates; plain
//! floating-point sign tests are never used for combinatorial decisions.

pub mod analysis;
pub mod delaunay;
pub mod error;
pub mod expectation;
pub mod generators;
pub mod geom;
pub mod io;
pub mod pointset;

pub use error::Error;
pub use pointset::PointSet;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
