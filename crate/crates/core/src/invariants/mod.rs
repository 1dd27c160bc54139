//! Exact classical parameters: α, ω, γ, χ, θ, matchings, and structural tests.

mod coloring;
mod domination;
mod independence;
mod matching;
mod structure;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub use coloring::{chromatic_number, clique_cover_number};
pub use domination::domination_number;
pub use independence::{
    clique_number, disjoint_max_independent_sets, independence_number, max_disjoint_max_independent_sets_within,
    max_independent_set_within, maximum_independent_sets, maximum_independent_sets_within,
};
pub use matching::{constrained_matching, maximum_matching, Matching, MATCHING_MAX_VERTICES};
pub use structure::{induced_p4, is_cograph, is_triangle_free};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("graph has {n} vertices; this search is capped at {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("vertex set is not a subset of the graph's vertices")]
    NotASubset,
}

/// α, γ, θ and ω of one graph, each with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamReport {
    pub alpha: usize,
    pub gamma: usize,
    pub theta: usize,
    pub omega: usize,
    pub independent_set: VertexSet,
    pub dominating_set: VertexSet,
    pub clique_partition: Vec<VertexSet>,
    pub max_clique: VertexSet,
}

impl ParamReport {
    pub fn compute(g: &Graph) -> ParamReport {
        let (alpha, independent_set) = independence_number(g);
        let (gamma, dominating_set) = domination_number(g);
        let (theta, clique_partition) = clique_cover_number(g);
        let (omega, max_clique) = clique_number(g);
        ParamReport { alpha, gamma, theta, omega, independent_set, dominating_set, clique_partition, max_clique }
    }

    /// Checks every witness against its definition and the chain γ ≤ α ≤ θ.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        let check = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
        check(g.is_independent(self.independent_set) && self.independent_set.len() == self.alpha, "independent set")?;
        check(g.is_dominating(self.dominating_set) && self.dominating_set.len() == self.gamma, "dominating set")?;
        check(g.is_clique(self.max_clique) && self.max_clique.len() == self.omega, "clique")?;
        let union = self.clique_partition.iter().fold(VertexSet::EMPTY, |a, &p| a | p);
        let sizes: usize = self.clique_partition.iter().map(|p| p.len()).sum();
        check(
            self.clique_partition.len() == self.theta
                && union == g.vertices()
                && sizes == g.n()
                && self.clique_partition.iter().all(|&p| g.is_clique(p)),
            "clique partition",
        )?;
        check(self.gamma <= self.alpha && self.alpha <= self.theta, "gamma <= alpha <= theta")
    }
}
