//! Separating polytopes for subsets of the Boolean cube.
//!
//! Everything here runs over exact rational arithmetic; there is no floating
//! point anywhere in the membership, projection, or verification paths.

pub mod construct;
pub mod cube;
pub mod error;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod poly;
pub mod project;
pub mod rat;
pub mod sample;
pub mod suite;

pub use cube::{enum_cube, odd_set, split_point, BoolSet, CoordPartition, CubePoint};
pub use error::{Error, Result};
pub use poly::{
    AffineMap, ConstraintEval, ExtendedFormulation, HPolytope, LinConstraint, Relation,
};
pub use rat::Rat;
