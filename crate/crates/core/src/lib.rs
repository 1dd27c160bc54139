//! Exact solvers, strategies and bounds for the eviction game and the
//! eternal domination game on small simple graphs.

pub mod graph;
pub mod bounds;
pub mod game;
pub mod invariants;
pub mod strategies;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use graph::{FamilySpec, Graph, GraphError, VertexSet};
