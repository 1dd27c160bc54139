//! Named graph families and a small textual grammar for them.
//!
//! ```text
//! spec  := name [":" int ("," int)*]
//!        | "join(" spec "," spec ")" | "union(" spec "," spec ")"
//!        | "copies(" int "," spec ")"
//! ```
//!
//! e.g. `cycle:7`, `bipartite:3,4`, `gk:2`, `join(complete:2,empty:4)`,
//! `copies(3,complete:4)`.

use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    /// K_{1,k} with every edge subdivided once: centre 0, middles `1..=k`, leaf `k+i` hangs off middle `i`.
    Spider(usize),
    /// k disjoint copies of C7, a vertex `v` joined to all of them, and a pendant `w` on `v`.
    /// Cycle `c` occupies `7c..7c+7`; `v = 7k`, `w = 7k+1`.
    Gk(usize),
    /// K2 ∨ co-K_m; vertices 0 and 1 are the universal pair.
    UniversalPair(usize),
    /// K1 + (K2 ∨ co-K_t); vertex 0 is isolated, 1 and 2 are the universal pair.
    Anomaly(usize),
    /// `Anomaly(t)` plus the edge from the isolated vertex to vertex 1 (degree t+1).
    AnomalyBridged(usize),
    /// The connected edge-addition example with vertices
    /// v0, v1, v1', v1'', v1''', v2, v2', v2'', v2''' labelled 0..=8.
    G2,
    /// `G2` plus the edge v0 v1.
    G2Prime,
    Join(Box<FamilySpec>, Box<FamilySpec>),
    Union(Box<FamilySpec>, Box<FamilySpec>),
    Copies(usize, Box<FamilySpec>),
}

const G2_EDGES: [(usize, usize); 12] = [
    // v2 side: {v2, v2'} universal over {v2'', v2'''}, v0 pendant on v2
    (5, 6),
    (5, 7),
    (5, 8),
    (6, 7),
    (6, 8),
    (0, 5),
    // v1 side: {v1, v1'} universal over {v1'', v1'''}
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    // bridge v2' v1'
    (6, 2),
];

/// Vertex labels of [`FamilySpec::G2`] in index order.
pub const G2_LABELS: [&str; 9] = ["v0", "v1", "v1'", "v1''", "v1'''", "v2", "v2'", "v2''", "v2'''"];

impl FamilySpec {
    /// Vertex count of the generated graph, computed without building it.
    pub fn order(&self) -> usize {
        use FamilySpec::*;
        match self {
            Path(n) | Cycle(n) | Complete(n) | Empty(n) => *n,
            CompleteBipartite(m, n) => m + n,
            Star(n) => n + 1,
            Spider(k) => 2 * k + 1,
            Gk(k) => 7 * k + 2,
            UniversalPair(m) => m + 2,
            Anomaly(t) | AnomalyBridged(t) => t + 3,
            G2 | G2Prime => 9,
            Join(a, b) | Union(a, b) => a.order() + b.order(),
            Copies(k, a) => k.saturating_mul(a.order()),
        }
    }

    fn validate(&self) -> Result<(), GraphError> {
        use FamilySpec::*;
        let bad = || Err(GraphError::InvalidSpec(self.to_string()));
        match self {
            Path(0) | Complete(0) | Empty(0) | Star(0) | Spider(0) | Gk(0) | UniversalPair(0) | Anomaly(0)
            | AnomalyBridged(0) | Copies(0, _) => bad(),
            Cycle(n) if *n < 3 => bad(),
            CompleteBipartite(m, n) if *m == 0 || *n == 0 => bad(),
            Join(a, b) | Union(a, b) => {
                a.validate()?;
                b.validate()
            }
            Copies(_, a) => a.validate(),
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Graph, GraphError> {
        self.validate()?;
        let order = self.order();
        if order > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(order));
        }
        Ok(self.build()?.with_name(self.to_string()))
    }

    fn build(&self) -> Result<Graph, GraphError> {
        use FamilySpec::*;
        match *self {
            Path(n) => {
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::from_edges(n, &edges)
            }
            Cycle(n) => {
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edges(n, &edges)
            }
            Complete(n) => Ok(Graph::empty(n)?.complement()),
            Empty(n) => Graph::empty(n),
            CompleteBipartite(m, n) => Graph::empty(m)?.join(&Graph::empty(n)?),
            Star(n) => CompleteBipartite(1, n).build(),
            Spider(k) => {
                let mut edges = Vec::with_capacity(2 * k);
                for i in 1..=k {
                    edges.push((0, i));
                    edges.push((i, k + i));
                }
                Graph::from_edges(2 * k + 1, &edges)
            }
            Gk(k) => {
                let n = 7 * k + 2;
                let (v, w) = (7 * k, 7 * k + 1);
                let mut edges = Vec::with_capacity(14 * k + 1);
                for c in 0..k {
                    for i in 0..7 {
                        edges.push((7 * c + i, 7 * c + (i + 1) % 7));
                        edges.push((7 * c + i, v));
                    }
                }
                edges.push((v, w));
                Graph::from_edges(n, &edges)
            }
            UniversalPair(m) => Complete(2).build()?.join(&Graph::empty(m)?),
            Anomaly(t) => Graph::empty(1)?.disjoint_union(&UniversalPair(t).build()?),
            AnomalyBridged(t) => Anomaly(t).build()?.add_edge(0, 1),
            G2 => Graph::from_edges(9, &G2_EDGES),
            G2Prime => G2.build()?.add_edge(0, 1),
            Join(ref a, ref b) => a.build()?.join(&b.build()?),
            Union(ref a, ref b) => a.build()?.disjoint_union(&b.build()?),
            Copies(k, ref a) => {
                let one = a.build()?;
                let mut g = one.clone();
                for _ in 1..k {
                    g = g.disjoint_union(&one)?;
                }
                Ok(g)
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            Empty(n) => write!(f, "empty:{n}"),
            CompleteBipartite(m, n) => write!(f, "bipartite:{m},{n}"),
            Star(n) => write!(f, "star:{n}"),
            Spider(k) => write!(f, "spider:{k}"),
            Gk(k) => write!(f, "gk:{k}"),
            UniversalPair(m) => write!(f, "universal-pair:{m}"),
            Anomaly(t) => write!(f, "anomaly:{t}"),
            AnomalyBridged(t) => write!(f, "anomaly-bridged:{t}"),
            G2 => write!(f, "g2"),
            G2Prime => write!(f, "g2prime"),
            Join(a, b) => write!(f, "join({a},{b})"),
            Union(a, b) => write!(f, "union({a},{b})"),
            Copies(k, a) => write!(f, "copies({k},{a})"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Option<()> {
        self.eat(s).then_some(())
    }

    fn int(&mut self) -> Option<usize> {
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        let v = self.rest()[..len].parse().ok()?;
        self.pos += len;
        Some(v)
    }

    fn spec(&mut self) -> Option<FamilySpec> {
        use FamilySpec::*;
        if self.eat("join(") || self.eat("union(") {
            let is_join = self.src[..self.pos].ends_with("join(");
            let a = self.spec()?;
            self.expect(",")?;
            let b = self.spec()?;
            self.expect(")")?;
            return Some(if is_join { Join(Box::new(a), Box::new(b)) } else { Union(Box::new(a), Box::new(b)) });
        }
        if self.eat("copies(") {
            let k = self.int()?;
            self.expect(",")?;
            let a = self.spec()?;
            self.expect(")")?;
            return Some(Copies(k, Box::new(a)));
        }
        let len = self.rest().bytes().take_while(|b| b.is_ascii_alphanumeric() || *b == b'-' || *b == b'_').count();
        let name = self.rest()[..len].to_ascii_lowercase();
        self.pos += len;
        let mut args = Vec::new();
        if self.eat(":") {
            args.push(self.int()?);
            while self.rest().starts_with(',') && self.rest()[1..].starts_with(|c: char| c.is_ascii_digit()) {
                self.pos += 1;
                args.push(self.int()?);
            }
        }
        let spec = match (name.as_str(), args.as_slice()) {
            ("path", [n]) => Path(*n),
            ("cycle", [n]) => Cycle(*n),
            ("complete", [n]) => Complete(*n),
            ("empty", [n]) => Empty(*n),
            ("bipartite" | "complete-bipartite", [m, n]) => CompleteBipartite(*m, *n),
            ("star", [n]) => Star(*n),
            ("spider", [k]) => Spider(*k),
            ("gk", [k]) => Gk(*k),
            ("universal-pair", [m]) => UniversalPair(*m),
            ("anomaly", [t]) => Anomaly(*t),
            ("anomaly-bridged", [t]) => AnomalyBridged(*t),
            ("g2", []) => G2,
            ("g2prime", []) => G2Prime,
            _ => return None,
        };
        Some(spec)
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { src: &compact, pos: 0 };
        match p.spec() {
            Some(spec) if p.pos == compact.len() => {
                spec.validate()?;
                Ok(spec)
            }
            _ => Err(GraphError::InvalidSpec(s.to_string())),
        }
    }
}
