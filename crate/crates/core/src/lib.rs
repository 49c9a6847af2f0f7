//! Exact tools for orthogonality dimension, minrank, line digraphs,
//! subspace graphs and index codes over prime fields.

pub mod bitset;
mod budget;
pub mod chromatic;
pub mod clique;
pub mod error;
pub mod gf;
pub mod graph;
pub mod hom;
pub mod index_code;
pub mod params;
pub mod real;
pub mod subspace_graphs;

pub use budget::SearchLimits;
pub use error::{Error, Interrupt, Result};
