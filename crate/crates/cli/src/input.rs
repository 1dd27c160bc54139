use std::path::PathBuf;

use clap::Args;
use evictlab::graph::{parse_edge_list, parse_graph6, to_graph6};
use evictlab::{FamilySpec, Graph};

use crate::error::{CliError, CliResult};

/// Exactly one way of naming the input graph.
#[derive(Args, Clone, Debug, Default)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Named family such as `cycle:7`, `gk:2` or `join(complete:2,empty:4)`
    #[arg(long)]
    pub family: Option<String>,
    /// A graph6 record
    #[arg(long)]
    pub g6: Option<String>,
    /// Edge-list file: an `n m` header, then one `u v` pair per line
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,
}

/// A parsed input graph and the graph6 string used as its cache key.
#[derive(Clone, Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub key: String,
}

impl GraphSource {
    pub fn family(spec: &str) -> Self {
        GraphSource { family: Some(spec.to_string()), ..Default::default() }
    }

    pub fn load(&self) -> CliResult<LoadedGraph> {
        if let Some(spec) = &self.family {
            let graph = parse_family(spec)?;
            let key = to_graph6(&graph);
            return Ok(LoadedGraph { graph, key });
        }
        if let Some(record) = &self.g6 {
            let record = record.trim();
            let graph = parse_graph6(record).map_err(|e| CliError::from(e).context("parsing --g6"))?;
            return Ok(LoadedGraph { graph, key: record.to_string() });
        }
        if let Some(path) = &self.edges {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::from(e).context(format!("reading {}", path.display())))?;
            let graph = parse_edge_list(&text).map_err(|e| CliError::from(e).context(format!("parsing {}", path.display())))?;
            let key = to_graph6(&graph);
            return Ok(LoadedGraph { graph, key });
        }
        Err(CliError::parse("no graph given; use --family, --g6 or --edges"))
    }
}

pub fn parse_family(spec: &str) -> CliResult<Graph> {
    let parsed: FamilySpec = spec.parse().map_err(|e| CliError::from(e).context("parsing family spec"))?;
    Ok(parsed.generate()?)
}
