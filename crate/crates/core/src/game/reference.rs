//! Slow, direct implementation of the safe-set definition, kept as a test
//! oracle for the indexed solver.

use std::collections::BTreeSet;

use crate::graph::{Graph, VertexSet};

use super::Rules;

fn k_subsets(n: usize, k: usize, start: usize, cur: VertexSet, out: &mut Vec<VertexSet>) {
    if cur.len() == k {
        out.push(cur);
        return;
    }
    for v in start..n {
        if n - v < k - cur.len() {
            break;
        }
        k_subsets(n, k, v + 1, cur.with(v), out);
    }
}

fn survives(g: &Graph, rules: Rules, d: VertexSet, live: &BTreeSet<VertexSet>) -> bool {
    match rules {
        Rules::Eviction => d.iter().all(|v| {
            let n_closed = g.neighbors(v).with(v);
            n_closed.is_subset(d)
                || g.neighbors(v).iter().filter(|w| !d.contains(*w)).any(|w| live.contains(&d.without(v).with(w)))
        }),
        Rules::EternalDomination => (0..g.n()).filter(|w| !d.contains(*w)).all(|w| {
            g.neighbors(w).iter().filter(|v| d.contains(*v)).any(|v| live.contains(&d.without(v).with(w)))
        }),
    }
}

/// Greatest fixed point by whole-set rounds: start from every dominating
/// k-subset and drop any configuration with an attack that has no surviving
/// reply, until a round removes nothing.
pub fn naive_safe_set(g: &Graph, k: usize, rules: Rules) -> Vec<VertexSet> {
    let mut all = Vec::new();
    if k >= 1 && k <= g.n() {
        k_subsets(g.n(), k, 0, VertexSet::EMPTY, &mut all);
    }
    let mut live: BTreeSet<VertexSet> = all
        .into_iter()
        .filter(|&d| {
            let covered = d.iter().fold(VertexSet::EMPTY, |acc, v| acc | g.neighbors(v).with(v));
            covered == g.vertices()
        })
        .collect();
    loop {
        let next: BTreeSet<VertexSet> = live.iter().copied().filter(|&d| survives(g, rules, d, &live)).collect();
        if next.len() == live.len() {
            return next.into_iter().collect();
        }
        live = next;
    }
}
