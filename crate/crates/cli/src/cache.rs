//! JSON-lines result cache, one [`CacheRecord`] per line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use evictlab::bounds::BoundReport;
use evictlab::game::{eternal_domination_number, eviction_number};
use evictlab::graph::{canonical_form, parse_graph6, to_graph6};
use evictlab::invariants::{clique_cover_number, domination_number, independence_number};
use evictlab::Graph;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// Largest order for which records carry a canonical-form alias.
pub const CANONICAL_ALIAS_MAX_N: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheRecord {
    /// The graph6 string the graph was given as.
    pub graph6: String,
    /// graph6 of the canonical relabelling, for graphs on at most 8 vertices.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<String>,
    pub alpha: usize,
    pub gamma: usize,
    pub theta: usize,
    pub eviction: Option<usize>,
    pub eternal: Option<usize>,
    pub version: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

pub fn canonical_alias(g: &Graph) -> Option<String> {
    (g.n() <= CANONICAL_ALIAS_MAX_N).then(|| to_graph6(&canonical_form(g)))
}

impl CacheRecord {
    pub fn from_report(key: &str, g: &Graph, r: &BoundReport) -> CacheRecord {
        let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
        CacheRecord {
            graph6: key.to_string(),
            canonical: canonical_alias(g),
            alpha: r.alpha,
            gamma: r.gamma,
            theta: r.theta,
            eviction: r.eviction,
            eternal: r.eternal,
            version: evictlab::VERSION.to_string(),
            timestamp,
        }
    }

    /// Re-solves the graph and compares every stored value.
    pub fn recheck(&self) -> Result<(), String> {
        let g = parse_graph6(&self.graph6).map_err(|e| format!("{}: {e}", self.graph6))?;
        let mut diffs = Vec::new();
        let mut cmp = |name: &str, stored: usize, fresh: usize| {
            if stored != fresh {
                diffs.push(format!("{name} stored {stored}, computed {fresh}"));
            }
        };
        cmp("alpha", self.alpha, independence_number(&g).0);
        cmp("gamma", self.gamma, domination_number(&g).0);
        cmp("theta", self.theta, clique_cover_number(&g).0);
        if let Some(e) = self.eviction {
            cmp("eviction", e, eviction_number(&g).map_err(|err| err.to_string())?);
        }
        if let Some(e) = self.eternal {
            cmp("eternal", e, eternal_domination_number(&g).map_err(|err| err.to_string())?);
        }
        if let Some(alias) = &self.canonical {
            let fresh = canonical_alias(&g).unwrap_or_default();
            if *alias != fresh {
                diffs.push(format!("canonical alias stored {alias}, computed {fresh}"));
            }
        }
        if diffs.is_empty() {
            Ok(())
        } else {
            Err(format!("{}: {}", self.graph6, diffs.join(", ")))
        }
    }
}

#[derive(Clone, Debug)]
pub struct Cache {
    path: PathBuf,
}

impl Cache {
    pub fn new(path: impl Into<PathBuf>) -> Cache {
        Cache { path: path.into() }
    }

    /// `$XDG_CACHE_HOME/evictlab/cache.jsonl`, else `~/.cache/evictlab/cache.jsonl`.
    pub fn default_path() -> Option<PathBuf> {
        let base = std::env::var_os("XDG_CACHE_HOME")
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache")))?;
        Some(base.join("evictlab").join("cache.jsonl"))
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// All records; a missing file is an empty cache.
    pub fn load(&self) -> CliResult<Vec<CacheRecord>> {
        let text = match fs::read_to_string(&self.path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(CliError::from(e).context(format!("reading {}", self.path.display()))),
        };
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                serde_json::from_str(l)
                    .map_err(|e| CliError::parse(format!("{} line {}: {e}", self.path.display(), i + 1)))
            })
            .collect()
    }

    /// A record stored under `key`, or under the same canonical alias.
    pub fn lookup(&self, key: &str, alias: Option<&str>) -> CliResult<Option<CacheRecord>> {
        let records = self.load()?;
        let exact = records.iter().find(|r| r.graph6 == key);
        let by_alias = || alias.and_then(|a| records.iter().find(|r| r.canonical.as_deref() == Some(a)));
        Ok(exact.or_else(by_alias).cloned())
    }

    /// Stores `record`, replacing any record with the same key.
    pub fn insert(&self, record: CacheRecord) -> CliResult<()> {
        let mut records = self.load()?;
        records.retain(|r| r.graph6 != record.graph6);
        records.push(record);
        self.write_all(&records)
    }

    /// Deletes the cache file; returns how many records it held.
    pub fn clear(&self) -> CliResult<usize> {
        let count = self.load()?.len();
        match fs::remove_file(&self.path) {
            Err(e) if e.kind() != std::io::ErrorKind::NotFound => Err(e.into()),
            _ => Ok(count),
        }
    }

    fn write_all(&self, records: &[CacheRecord]) -> CliResult<()> {
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let tmp = self.path.with_extension("jsonl.tmp");
        let mut out = fs::File::create(&tmp)?;
        for r in records {
            writeln!(out, "{}", serde_json::to_string(r)?)?;
        }
        out.sync_all()?;
        fs::rename(&tmp, &self.path)?;
        Ok(())
    }
}

/// Indices of `sample` records spread evenly over `len`, first record included.
pub fn sample_indices(len: usize, sample: usize) -> Vec<usize> {
    let take = sample.min(len);
    (0..take).map(|i| i * len / take).collect()
}
