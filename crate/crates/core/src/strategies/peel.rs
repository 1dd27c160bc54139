use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::invariants::{max_disjoint_max_independent_sets_within, max_independent_set_within};

use super::StrategyError;

/// Largest order accepted by the exhaustive minimum-deletion search.
pub const PEEL_MAX_VERTICES: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelStep {
    /// The smallest set removed at this level.
    pub removed: VertexSet,
    /// Independence number after removal.
    pub alpha_after: usize,
    /// Size of a largest family of disjoint maximum independent sets after removal.
    pub disjoint_after: usize,
    /// `threshold(alpha_after)` plus everything removed so far.
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelingResult {
    pub alpha: usize,
    /// Disjoint maximum independent sets of the input graph.
    pub disjoint_initial: usize,
    pub steps: Vec<PeelStep>,
    /// Level `l < alpha` at which the residual graph had enough disjoint
    /// maximum independent sets, if any level did.
    pub achieved_level: Option<usize>,
    /// Vertices left after removing every `S_i`.
    pub residual: VertexSet,
}

impl PeelingResult {
    /// Union of all removed sets.
    pub fn removed(&self) -> VertexSet {
        self.steps.iter().fold(VertexSet::EMPTY, |acc, s| acc | s.removed)
    }

    /// Checks the cardinality cascade: `|S_0| <= alpha * disjoint_initial`,
    /// and each later set is smaller than `(alpha - i)` times the stopping
    /// target its level missed.
    pub fn check_cascade(&self) -> Result<(), String> {
        let Some(first) = self.steps.first() else {
            return Err("no peeling steps".into());
        };
        if first.removed.len() > self.alpha * self.disjoint_initial {
            return Err(format!(
                "|S_0| = {} exceeds {} * {}",
                first.removed.len(),
                self.alpha,
                self.disjoint_initial
            ));
        }
        for (i, pair) in self.steps.windows(2).enumerate() {
            let (prev, cur) = (&pair[0], &pair[1]);
            let level = i + 1;
            let bound = (self.alpha - level).saturating_mul(prev.target);
            if cur.removed.len() >= bound {
                return Err(format!("|S_{level}| = {} is not below {bound}", cur.removed.len()));
            }
        }
        Ok(())
    }
}

/// A smallest subset of `within` whose removal lowers the independence
/// number of the induced subgraph; the first in lexicographic order among
/// those of that size.
pub fn min_alpha_reducing_set(g: &Graph, within: VertexSet) -> VertexSet {
    let alpha = max_independent_set_within(g, within).len();
    let verts = within.to_vec();
    for size in 1..=verts.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let t: VertexSet = idx.iter().map(|&i| verts[i]).collect();
            if max_independent_set_within(g, within - t).len() < alpha {
                return t;
            }
            // next combination in lexicographic order
            let Some(p) = (0..size).rev().find(|&p| idx[p] < verts.len() - size + p) else { break };
            idx[p] += 1;
            for q in p + 1..size {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
    within
}

/// Peeling with the default stopping threshold `l + 1` at level `l`.
pub fn peel(g: &Graph) -> Result<PeelingResult, StrategyError> {
    peel_with(g, |l| l + 1)
}

/// Repeatedly removes a smallest set lowering α by one. Stops at the first
/// level `l` whose residual graph has at least `threshold(l) + |S|` disjoint
/// maximum independent sets, `S` being everything removed so far.
pub fn peel_with(g: &Graph, threshold: impl Fn(usize) -> usize) -> Result<PeelingResult, StrategyError> {
    if g.n() > PEEL_MAX_VERTICES {
        return Err(StrategyError::TooLarge { n: g.n(), cap: PEEL_MAX_VERTICES });
    }
    let all = g.vertices();
    let alpha = max_independent_set_within(g, all).len();
    if alpha < 2 {
        return Err(StrategyError::Precondition(format!("independence number {alpha} is below 2")));
    }
    let disjoint_initial = max_disjoint_max_independent_sets_within(g, all).len();
    let mut residual = all;
    let mut removed_total = 0;
    let mut steps = Vec::new();
    let mut achieved_level = None;
    for level in (1..alpha).rev() {
        let s = min_alpha_reducing_set(g, residual);
        residual = residual - s;
        removed_total += s.len();
        let alpha_after = max_independent_set_within(g, residual).len();
        debug_assert_eq!(alpha_after, level);
        let disjoint_after = max_disjoint_max_independent_sets_within(g, residual).len();
        let target = threshold(level).saturating_add(removed_total);
        steps.push(PeelStep { removed: s, alpha_after, disjoint_after, target });
        if disjoint_after >= target {
            achieved_level = Some(level);
            break;
        }
    }
    Ok(PeelingResult { alpha, disjoint_initial, steps, achieved_level, residual })
}
