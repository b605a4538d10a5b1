//! Ruler-and-compass arithmetic on the lemniscate of Bernoulli.

pub mod arc_algebra;
pub mod cli;
pub mod complex;
pub mod division_radicals;
pub mod error;
pub mod kernel;
pub mod numerics;
pub mod precision;
pub mod recipes;
pub mod svg;
pub mod trace;

pub use error::{Error, Result};
pub use precision::PrecisionContext;
