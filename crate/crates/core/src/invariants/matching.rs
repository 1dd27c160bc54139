use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

use super::InvariantError;

/// Largest order accepted by the exhaustive matching search.
pub const MATCHING_MAX_VERTICES: usize = 20;

/// A set of vertex-disjoint edges, each stored as `(u, v)` with `u < v`, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Builds a matching; returns `None` if two edges share a vertex or an edge is a loop.
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Option<Matching> {
        let mut out: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        out.sort_unstable();
        let mut seen = VertexSet::EMPTY;
        for &(u, v) in &out {
            if u == v || seen.contains(u) || seen.contains(v) {
                return None;
            }
            seen = seen.with(u).with(v);
        }
        Some(Matching { edges: out })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, &(u, v)| acc.with(u).with(v))
    }

    pub fn partner(&self, x: usize) -> Option<usize> {
        self.edges.iter().find_map(|&(u, v)| match x {
            _ if x == u => Some(v),
            _ if x == v => Some(u),
            _ => None,
        })
    }

    /// Replaces edge `old` by `new`; the caller keeps the result a matching.
    pub(crate) fn swap_edge(&mut self, old: (usize, usize), new: (usize, usize)) {
        let old = (old.0.min(old.1), old.0.max(old.1));
        self.edges.retain(|&e| e != old);
        self.edges.push((new.0.min(new.1), new.0.max(new.1)));
        self.edges.sort_unstable();
    }

    /// True if every edge is an edge of `g` and no vertex is used twice.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        Matching::new(self.edges.iter().copied()).is_some()
            && self.edges.iter().all(|&(u, v)| v < g.n() && g.has_edge(u, v))
    }
}

struct Search<'a> {
    g: &'a Graph,
    edges: Vec<(usize, usize)>,
    covered: usize,
    best: Option<(usize, Vec<(usize, usize)>)>,
}

impl Search<'_> {
    fn better(&self) -> bool {
        let Some((bc, be)) = &self.best else { return true };
        if self.covered != *bc {
            return self.covered > *bc;
        }
        if self.edges.len() != be.len() {
            return self.edges.len() < be.len();
        }
        let mut mine = self.edges.clone();
        mine.sort_unstable();
        mine < *be
    }

    fn go(&mut self, avail: VertexSet, todo: VertexSet) {
        if let Some((bc, be)) = &self.best {
            let reachable = self.covered + todo.len();
            if reachable < *bc || (reachable == *bc && self.edges.len() + todo.len().div_ceil(2) > be.len()) {
                return;
            }
        }
        let Some(v) = todo.first() else {
            if self.better() {
                let mut e = self.edges.clone();
                e.sort_unstable();
                self.best = Some((self.covered, e));
            }
            return;
        };
        for w in self.g.neighbors(v) & avail {
            self.edges.push((v.min(w), v.max(w)));
            let gained = 1 + todo.contains(w) as usize;
            self.covered += gained;
            self.go(avail.without(v).without(w), todo.without(v).without(w));
            self.covered -= gained;
            self.edges.pop();
        }
        self.go(avail.without(v), todo.without(v));
    }
}

/// Among matchings of `g` covering the most vertices of `s`, one with the
/// fewest edges; remaining ties go to the lexicographically smallest sorted
/// edge list.
pub fn constrained_matching(g: &Graph, s: VertexSet) -> Result<Matching, InvariantError> {
    if g.n() > MATCHING_MAX_VERTICES {
        return Err(InvariantError::TooLarge { n: g.n(), cap: MATCHING_MAX_VERTICES });
    }
    if !s.is_subset(g.vertices()) {
        return Err(InvariantError::NotASubset);
    }
    let mut search = Search { g, edges: Vec::new(), covered: 0, best: None };
    search.go(g.vertices(), s);
    let (_, edges) = search.best.expect("the empty matching is always a candidate");
    Ok(Matching { edges })
}

pub fn maximum_matching(g: &Graph) -> Result<Matching, InvariantError> {
    constrained_matching(g, g.vertices())
}
