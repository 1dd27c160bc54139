//! Exact vertex colouring by DSATUR-ordered branch and bound, and the clique
//! cover number θ(G) = χ(co-G).

use crate::graph::{Graph, VertexSet};

use super::independence::clique_number;

struct Dsatur<'a> {
    g: &'a Graph,
    /// `classes[c]` holds the vertices coloured `c`.
    classes: Vec<VertexSet>,
    color: Vec<usize>,
    lower: usize,
    best: Option<Vec<usize>>,
    best_k: usize,
}

impl Dsatur<'_> {
    fn saturation(&self, v: usize) -> usize {
        let nb = self.g.neighbors(v);
        self.classes.iter().filter(|c| !c.is_disjoint(nb)).count()
    }

    fn pick(&self, uncolored: VertexSet) -> usize {
        uncolored
            .iter()
            .max_by_key(|&v| (self.saturation(v), (self.g.neighbors(v) & uncolored).len(), usize::MAX - v))
            .unwrap()
    }

    fn go(&mut self, uncolored: VertexSet) {
        if self.best_k == self.lower {
            return;
        }
        if uncolored.is_empty() {
            if self.classes.len() < self.best_k {
                self.best_k = self.classes.len();
                self.best = Some(self.color.clone());
            }
            return;
        }
        let v = self.pick(uncolored);
        let nb = self.g.neighbors(v);
        for c in 0..self.classes.len() {
            if self.classes[c].is_disjoint(nb) {
                self.classes[c].insert(v);
                self.color[v] = c;
                self.go(uncolored.without(v));
                self.classes[c].remove(v);
            }
        }
        if self.classes.len() + 1 < self.best_k {
            self.classes.push(VertexSet::singleton(v));
            self.color[v] = self.classes.len() - 1;
            self.go(uncolored.without(v));
            self.classes.pop();
        }
    }
}

/// χ(G) with a proper colouring `color[v] ∈ 0..χ`.
pub fn chromatic_number(g: &Graph) -> (usize, Vec<usize>) {
    let lower = clique_number(g).0;
    let mut s = Dsatur {
        g,
        classes: Vec::new(),
        color: vec![0; g.n()],
        lower,
        best: None,
        best_k: g.n() + 1,
    };
    s.go(g.vertices());
    (s.best_k, s.best.expect("n colours always suffice"))
}

/// θ(G) with a partition of V(G) into that many cliques.
pub fn clique_cover_number(g: &Graph) -> (usize, Vec<VertexSet>) {
    let (k, color) = chromatic_number(&g.complement());
    let mut parts = vec![VertexSet::EMPTY; k];
    for (v, &c) in color.iter().enumerate() {
        parts[c].insert(v);
    }
    parts.sort();
    (k, parts)
}
