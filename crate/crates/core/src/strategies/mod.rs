//! Constructive defender strategies: the k²-guard array strategy, matching
//! maintenance on a small region, the peeling procedure that splits a graph
//! into those two parts, and the combined defence.

mod composite;
mod matching;
mod peel;
mod ramsey;

use thiserror::Error;

use crate::graph::GraphError;
use crate::invariants::InvariantError;

pub use composite::{composite_defense, composite_defense_with, CompositeDefense, Finding, Region};
pub use matching::{matching_defend, matching_init, MatchingMove, MatchingState};
pub use peel::{min_alpha_reducing_set, peel, peel_with, PeelStep, PeelingResult, PEEL_MAX_VERTICES};
pub use ramsey::{find_ramsey_array, ramsey_defend, ramsey_domination_witness, RamseyArray};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrategyError {
    #[error("vertex {0} is not a cell of the array")]
    NotInArray(usize),
    #[error("vertex {0} carries no guard")]
    NotGuarded(usize),
    #[error("column {column} holds {guards} guards instead of {expected}")]
    MalformedColumn { column: usize, guards: usize, expected: usize },
    #[error("no row of the array is fully guarded")]
    NoFullRow,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("graph has {n} vertices; this search is capped at {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
