use crate::graph::{Graph, VertexSet};

fn greedy(g: &Graph) -> VertexSet {
    let all = g.vertices();
    let mut chosen = VertexSet::EMPTY;
    let mut covered = VertexSet::EMPTY;
    while covered != all {
        let v = (0..g.n()).max_by_key(|&v| ((g.closed_neighborhood(v) - covered).len(), usize::MAX - v)).unwrap();
        chosen.insert(v);
        covered = covered | g.closed_neighborhood(v);
    }
    chosen
}

struct Search<'a> {
    g: &'a Graph,
    max_gain: usize,
    best: VertexSet,
}

impl Search<'_> {
    fn go(&mut self, chosen: VertexSet, covered: VertexSet) {
        let undominated = self.g.vertices() - covered;
        if undominated.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen;
            }
            return;
        }
        let lower = undominated.len().div_ceil(self.max_gain);
        if chosen.len() + lower >= self.best.len() {
            return;
        }
        // branch on the undominated vertex with the fewest possible dominators
        let u = undominated.iter().min_by_key(|&u| self.g.closed_neighborhood(u).len()).unwrap();
        let mut options: Vec<usize> = self.g.closed_neighborhood(u).iter().collect();
        options.sort_by_key(|&w| std::cmp::Reverse((self.g.closed_neighborhood(w) - covered).len()));
        for w in options {
            self.go(chosen.with(w), covered | self.g.closed_neighborhood(w));
        }
    }
}

/// γ(G) with a witness dominating set.
pub fn domination_number(g: &Graph) -> (usize, VertexSet) {
    let max_gain = (0..g.n()).map(|v| g.closed_neighborhood(v).len()).max().unwrap_or(1);
    let mut s = Search { g, max_gain, best: greedy(g) };
    s.go(VertexSet::EMPTY, VertexSet::EMPTY);
    (s.best.len(), s.best)
}
