//! Simple graphs on at most 64 vertices with bitset adjacency.
//!
//! Every vertex set (neighbourhoods, guard configurations, independent sets)
//! is a [`VertexSet`], one `u64` wide. Graphs are immutable values: the
//! editing operations return a new graph.

mod canon;
mod families;
mod graph6;
mod text;
mod vertex_set;

use std::fmt;

use rand::Rng;
use thiserror::Error;

pub use canon::{canonical_code, canonical_form, connected_graphs, non_isomorphic_graphs, CanonicalCode};
pub use families::{FamilySpec, G2_LABELS};
pub use graph6::{parse_graph6, to_graph6};
pub use text::{parse_edge_list, to_edge_list, GraphJson};
pub use vertex_set::VertexSet;

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    Loop(usize),
    #[error("malformed graph6 header: {0}")]
    Graph6Header(String),
    #[error("graph6 character {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    Graph6Char { offset: usize, byte: u8 },
    #[error("graph6 body has {found} characters, expected {expected}")]
    Graph6Length { expected: usize, found: usize },
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("invalid family spec `{0}`")]
    InvalidSpec(String),
}

/// A finite simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    name: Option<String>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n], name: None })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighbourhood N(v). Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood N[v]. Panics if `v` is out of range.
    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn try_neighbors(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    pub fn try_closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.closed_neighborhood(v))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// The graph with edge `uv` added. Adding an existing edge returns an identical graph.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n).map(|v| all - self.adj[v] - VertexSet::singleton(v)).collect();
        Graph { n: self.n, adj, name: self.name.as_ref().map(|s| format!("co-({s})")) }
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in increasing order.
    /// Also returns the original label of every new vertex.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        let keep = keep & self.vertices();
        let labels = keep.to_vec();
        let mut g = Graph::empty(labels.len())?;
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(i, j)?;
                }
            }
        }
        Ok((g, labels))
    }

    /// Vertices with every closed neighbourhood in `set` covered; i.e. `set` dominates them.
    pub fn dominated_by(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.closed_neighborhood(v))
    }

    pub fn is_dominating(&self, set: VertexSet) -> bool {
        self.dominated_by(set) == self.vertices()
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| (set.without(v)).is_subset(self.adj[v]))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v]) - seen;
            seen = seen | next;
            frontier = next;
        }
        seen == self.vertices()
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = frontier.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v]) - comp;
                comp = comp | next;
                frontier = next;
            }
            left = left - comp;
            out.push(comp);
        }
        out
    }

    /// Disjoint union `self + other`; `other` is relabelled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.insert_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.insert_edge(self.n + u, self.n + v)?;
        }
        Ok(g)
    }

    /// Join `self ∨ other`: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.insert_edge(u, self.n + v)?;
            }
        }
        Ok(g)
    }

    /// Applies a relabelling: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for u in 0..self.n {
            for v in self.adj[u] {
                adj[perm[u]].insert(perm[v]);
            }
        }
        Graph { n: self.n, adj, name: self.name.clone() }
    }

    /// Erdős–Rényi G(n, p).
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.insert_edge(u, v)?;
                }
            }
        }
        Ok(g)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson { n: self.n, edges: self.edges(), name: self.name.clone() }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("name", &self.name)
            .field("edges", &self.edges())
            .finish()
    }
}
