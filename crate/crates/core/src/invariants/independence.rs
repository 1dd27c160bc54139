use crate::graph::{Graph, VertexSet};

/// Greedy clique cover of `cand`, returned as `(vertex, cover index)` in
/// cover order. Any independent set meets each clique at most once, so the
/// index bounds how much the remaining candidates can add.
fn clique_cover_order(g: &Graph, cand: VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(cand.len());
    let mut left = cand;
    let mut idx = 0;
    while !left.is_empty() {
        idx += 1;
        let mut q = left;
        while let Some(v) = q.pop_first() {
            left.remove(v);
            out.push((v, idx));
            q = q & g.neighbors(v);
        }
    }
    out
}

fn expand(g: &Graph, cur: VertexSet, mut cand: VertexSet, best: &mut VertexSet) {
    let order = clique_cover_order(g, cand);
    for &(v, bound) in order.iter().rev() {
        if cur.len() + bound <= best.len() {
            return;
        }
        let next = cur.with(v);
        let rest = cand.without(v) - g.neighbors(v);
        if rest.is_empty() {
            if next.len() > best.len() {
                *best = next;
            }
        } else {
            expand(g, next, rest, best);
        }
        cand.remove(v);
    }
}

/// Maximum independent set of the subgraph induced by `within`.
pub fn max_independent_set_within(g: &Graph, within: VertexSet) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    if !within.is_empty() {
        expand(g, VertexSet::EMPTY, within, &mut best);
    }
    best
}

/// α(G) with a witness independent set.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    let s = max_independent_set_within(g, g.vertices());
    (s.len(), s)
}

/// ω(G) with a witness clique, computed as α of the complement.
pub fn clique_number(g: &Graph) -> (usize, VertexSet) {
    independence_number(&g.complement())
}

fn collect_all(g: &Graph, cur: VertexSet, cand: VertexSet, target: usize, out: &mut Vec<VertexSet>) {
    if cur.len() == target {
        out.push(cur);
        return;
    }
    if cur.len() + cand.len() < target {
        return;
    }
    let mut cand = cand;
    while let Some(v) = cand.pop_first() {
        if cur.len() + 1 + cand.len() < target {
            return;
        }
        collect_all(g, cur.with(v), cand - g.neighbors(v), target, out);
    }
}

/// Every independent set of size α inside `within`, lexicographic by sorted members.
pub fn maximum_independent_sets_within(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let alpha = max_independent_set_within(g, within).len();
    let mut out = Vec::new();
    collect_all(g, VertexSet::EMPTY, within, alpha, &mut out);
    out
}

pub fn maximum_independent_sets(g: &Graph) -> Vec<VertexSet> {
    maximum_independent_sets_within(g, g.vertices())
}

fn pick_disjoint(sets: &[VertexSet], start: usize, used: VertexSet, need: usize, chosen: &mut Vec<VertexSet>) -> bool {
    if need == 0 {
        return true;
    }
    for i in start..sets.len() {
        if sets.len() - i < need {
            return false;
        }
        if sets[i].is_disjoint(used) {
            chosen.push(sets[i]);
            if pick_disjoint(sets, i + 1, used | sets[i], need - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// `t` pairwise-disjoint maximum independent sets, if that many exist.
pub fn disjoint_max_independent_sets(g: &Graph, t: usize) -> Option<Vec<VertexSet>> {
    assert!(t >= 1, "t must be positive");
    let sets = maximum_independent_sets(g);
    let alpha = sets.first().map_or(0, |s| s.len());
    if alpha * t > g.n() {
        return None;
    }
    let mut chosen = Vec::with_capacity(t);
    pick_disjoint(&sets, 0, VertexSet::EMPTY, t, &mut chosen).then_some(chosen)
}

/// A largest collection of pairwise-disjoint maximum independent sets of the
/// subgraph induced by `within`.
pub fn max_disjoint_max_independent_sets_within(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let sets = maximum_independent_sets_within(g, within);
    let Some(alpha) = sets.first().map(|s| s.len()) else {
        return Vec::new();
    };
    let mut best = vec![sets[0]];
    let upper = within.len() / alpha.max(1);
    for t in 2..=upper {
        let mut chosen = Vec::with_capacity(t);
        if pick_disjoint(&sets, 0, VertexSet::EMPTY, t, &mut chosen) {
            best = chosen;
        } else {
            break;
        }
    }
    best
}
