//! Brute-force canonical labelling for small graphs, and isomorph-free
//! enumeration built on it.
//!
//! Vertices are first split into cells by an isomorphism invariant (degree,
//! then the sorted degrees of the neighbours); the canonical labelling is the
//! cell-respecting permutation whose upper-triangle adjacency code is
//! lexicographically smallest. The search prunes on code prefixes, so the
//! cost is far below `n!` for all but highly symmetric graphs.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{Graph, VertexSet};

/// Largest order accepted by [`canonical_code`]; the code must fit in 128 bits.
pub const MAX_CANONICAL_N: usize = 16;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalCode {
    pub n: u8,
    pub bits: u128,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: u32,
    cell_of_pos: Vec<usize>,
    cells: Vec<VertexSet>,
    order: Vec<usize>,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn go(&mut self, pos: usize, code: u128, len: u32) {
        if let Some((best, _)) = &self.best {
            let prefix = if len == 0 { 0 } else { best >> (self.total_bits - len) };
            if code > prefix {
                return;
            }
        }
        if pos == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        let cell = self.cell_of_pos[pos];
        for v in self.cells[cell] {
            let mut c = code;
            for &u in &self.order {
                c = (c << 1) | self.g.has_edge(u, v) as u128;
            }
            self.cells[cell].remove(v);
            self.order.push(v);
            self.go(pos + 1, c, len + pos as u32);
            self.order.pop();
            self.cells[cell].insert(v);
        }
    }
}

fn canonical_order(g: &Graph) -> (CanonicalCode, Vec<usize>) {
    let n = g.n();
    assert!(n <= MAX_CANONICAL_N, "canonical form supports n <= {MAX_CANONICAL_N}, got {n}");
    let invariant = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut verts: Vec<(_, usize)> = (0..n).map(|v| (invariant(v), v)).collect();
    verts.sort();
    let mut cells: Vec<VertexSet> = Vec::new();
    let mut cell_of_pos = Vec::with_capacity(n);
    for (i, (inv, v)) in verts.iter().enumerate() {
        if i == 0 || verts[i - 1].0 != *inv {
            cells.push(VertexSet::EMPTY);
        }
        cells.last_mut().unwrap().insert(*v);
        cell_of_pos.push(cells.len() - 1);
    }
    let mut s = Search {
        g,
        n,
        total_bits: (n * (n - 1) / 2) as u32,
        cell_of_pos,
        cells,
        order: Vec::with_capacity(n),
        best: None,
    };
    s.go(0, 0, 0);
    let (bits, order) = s.best.expect("search visits at least one labelling");
    (CanonicalCode { n: n as u8, bits }, order)
}

/// Isomorphism-invariant code: equal codes iff isomorphic graphs.
pub fn canonical_code(g: &Graph) -> CanonicalCode {
    canonical_order(g).0
}

/// The canonically relabelled copy of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    let (_, order) = canonical_order(g);
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.permuted(&perm)
}

/// One representative (in canonical labelling) of every isomorphism class
/// of graphs on `n` vertices, sorted by canonical code.
pub fn non_isomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=10).contains(&n), "isomorph-free enumeration supports 1 <= n <= 10");
    let mut level = vec![Graph::empty(1).unwrap()];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for base in &level {
            for mask in 0u64..(1 << (m - 1)) {
                let mut g = Graph::empty(m).unwrap();
                for (u, v) in base.edges() {
                    g.insert_edge(u, v).unwrap();
                }
                for u in VertexSet::from_bits(mask) {
                    g.insert_edge(u, m - 1).unwrap();
                }
                let (code, order) = canonical_order(&g);
                if seen.insert(code) {
                    let mut perm = vec![0; m];
                    for (pos, &v) in order.iter().enumerate() {
                        perm[v] = pos;
                    }
                    next.push((code, g.permuted(&perm)));
                }
            }
        }
        next.sort_by_key(|(c, _)| *c);
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    level
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    non_isomorphic_graphs(n).into_iter().filter(Graph::is_connected).collect()
}
