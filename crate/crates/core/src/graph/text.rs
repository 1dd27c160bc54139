use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// JSON shape of a graph: `{"n": .., "edges": [[u, v], ..], "name": ..}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(j: GraphJson) -> Result<Graph, GraphError> {
        let g = Graph::from_edges(j.n, &j.edges)?;
        Ok(match j.name {
            Some(name) => g.with_name(name),
            None => g,
        })
    }
}

/// `n m` header, then `m` lines `u v` with 0-indexed endpoints.
pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the edge-list format; blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, msg: &str| GraphError::EdgeList(format!("line {line}: {msg}"));
    let pair = |line: usize, l: &str| -> Result<(usize, usize), GraphError> {
        let nums: Vec<_> = l.split_whitespace().map(str::parse::<usize>).collect();
        match nums.as_slice() {
            [Ok(a), Ok(b)] => Ok((*a, *b)),
            _ => Err(err(line, "expected two non-negative integers")),
        }
    };
    let (hline, header) = lines.next().ok_or_else(|| GraphError::EdgeList("missing `n m` header".into()))?;
    let (n, m) = pair(hline, header)?;
    let mut g = Graph::empty(n)?;
    let mut count = 0;
    for (line, l) in lines {
        let (u, v) = pair(line, l)?;
        g.insert_edge(u, v)?;
        count += 1;
    }
    if count != m {
        return Err(GraphError::EdgeList(format!("header declares {m} edges, found {count}")));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    #[test]
    fn edge_list_round_trip() {
        let g = FamilySpec::Spider(3).generate().unwrap();
        let text = to_edge_list(&g);
        assert!(text.starts_with("7 6\n"));
        assert_eq!(parse_edge_list(&text).unwrap().edges(), g.edges());
    }

    #[test]
    fn edge_list_errors() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 1\n0 0\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
        assert_eq!(parse_edge_list("# c\n3 1\n\n0 2 # edge\n").unwrap().edges(), vec![(0, 2)]);
    }

    #[test]
    fn json_shape() {
        let g = FamilySpec::Path(3).generate().unwrap();
        let s = serde_json::to_string(&g.to_json()).unwrap();
        assert_eq!(s, r#"{"n":3,"edges":[[0,1],[1,2]],"name":"path:3"}"#);
        let back: GraphJson = serde_json::from_str(&s).unwrap();
        assert_eq!(Graph::try_from(back).unwrap(), g);
    }
}
