//! Counterexample search over streams of small graphs.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use evictlab::game::{eternal_domination_number_with, eviction_number_with, Limits};
use evictlab::graph::{canonical_code, connected_graphs, non_isomorphic_graphs, parse_graph6, to_graph6};
use evictlab::invariants::independence_number;
use evictlab::Graph;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::CANONICAL_ALIAS_MAX_N;
use crate::error::{CliError, CliResult};

/// Largest order the built-in enumeration covers.
pub const BUILTIN_MAX_N: usize = 7;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum HuntPredicate {
    /// e∞/α strictly above `num/den`.
    RatioExceeds { num: usize, den: usize },
    /// α = 3 and e∞ = 5.
    Alpha3Eviction5,
    /// γ∞ < e∞.
    EternalLtEviction,
}

impl HuntPredicate {
    fn needs_eternal(self) -> bool {
        self == HuntPredicate::EternalLtEviction
    }
}

impl fmt::Display for HuntPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HuntPredicate::RatioExceeds { num, den } => write!(f, "ratio-exceeds({num}/{den})"),
            HuntPredicate::Alpha3Eviction5 => f.write_str("alpha3-eviction5"),
            HuntPredicate::EternalLtEviction => f.write_str("eternal-lt-eviction"),
        }
    }
}

impl FromStr for HuntPredicate {
    type Err = String;

    /// Accepts `ratio-exceeds(p/q)`, `ratio-exceeds:p/q`, `alpha3-eviction5`
    /// and `eternal-lt-eviction`.
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        match s {
            "alpha3-eviction5" => return Ok(HuntPredicate::Alpha3Eviction5),
            "eternal-lt-eviction" => return Ok(HuntPredicate::EternalLtEviction),
            _ => {}
        }
        let arg = s
            .strip_prefix("ratio-exceeds")
            .and_then(|rest| rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).or_else(|| rest.strip_prefix(':')))
            .ok_or_else(|| format!("unknown predicate {s:?}"))?;
        let (p, q) = arg.split_once('/').unwrap_or((arg, "1"));
        let num = p.trim().parse::<usize>().map_err(|_| format!("bad ratio numerator in {s:?}"))?;
        let den = q.trim().parse::<usize>().map_err(|_| format!("bad ratio denominator in {s:?}"))?;
        if den == 0 {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(HuntPredicate::RatioExceeds { num, den })
    }
}

/// One output line of a hunt.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HuntLine {
    Finding(Finding),
    Skipped(Skipped),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Finding {
    pub graph6: String,
    pub alpha: usize,
    pub eviction: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eternal: Option<usize>,
    pub predicate: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Skipped {
    pub graph6: String,
    pub skipped: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HuntSummary {
    pub predicate: String,
    pub graphs: usize,
    pub duplicates: usize,
    pub solved: usize,
    pub findings: usize,
    pub skipped: usize,
    /// Largest e∞/α seen, as `e/alpha` in lowest terms.
    pub max_ratio: Option<String>,
    /// Every graph attaining `max_ratio`.
    pub max_ratio_graphs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HuntReport {
    pub lines: Vec<HuntLine>,
    pub summary: HuntSummary,
}

impl HuntReport {
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            out.push_str(&serde_json::to_string(line).expect("hunt lines serialize"));
            out.push('\n');
        }
        let summary = serde_json::json!({ "summary": self.summary });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }
}

#[derive(Clone, Debug)]
pub struct HuntOptions {
    pub workers: usize,
    pub timeout: Option<Duration>,
}

/// Per-graph result before aggregation.
enum Evaluated {
    Solved { graph6: String, alpha: usize, eviction: usize, eternal: Option<usize> },
    Skipped(Skipped),
}

fn evaluate(g: &Graph, predicate: HuntPredicate, timeout: Option<Duration>) -> Evaluated {
    let graph6 = to_graph6(g);
    let limits = Limits { deadline: timeout.map(|t| Instant::now() + t), ..Limits::default() };
    let skip = |why: String| Evaluated::Skipped(Skipped { graph6: graph6.clone(), skipped: why });
    let eviction = match eviction_number_with(g, &limits) {
        Ok(e) => e,
        Err(e) => return skip(format!("eviction: {e}")),
    };
    let eternal = if predicate.needs_eternal() {
        match eternal_domination_number_with(g, &limits) {
            Ok(e) => Some(e),
            Err(e) => return skip(format!("eternal domination: {e}")),
        }
    } else {
        None
    };
    Evaluated::Solved { graph6: graph6.clone(), alpha: independence_number(g).0, eviction, eternal }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn ratio_string(e: usize, a: usize) -> String {
    let d = gcd(e, a).max(1);
    format!("{}/{}", e / d, a / d)
}

fn check(predicate: HuntPredicate, alpha: usize, eviction: usize, eternal: Option<usize>) -> Option<String> {
    match predicate {
        HuntPredicate::RatioExceeds { num, den } => {
            (eviction * den > num * alpha).then(|| ratio_string(eviction, alpha))
        }
        HuntPredicate::Alpha3Eviction5 => (alpha == 3 && eviction == 5).then(|| "alpha 3, eviction 5".to_string()),
        HuntPredicate::EternalLtEviction => {
            let ed = eternal?;
            (ed < eviction).then(|| format!("{ed} < {eviction}"))
        }
    }
}

/// Drops isomorphic repeats, keeping the first of each class. Graphs above
/// 8 vertices are compared by their graph6 string only.
pub fn dedup(graphs: Vec<Graph>) -> (Vec<Graph>, usize) {
    let mut by_code = HashSet::new();
    let mut by_text = HashSet::new();
    let before = graphs.len();
    let kept: Vec<Graph> = graphs
        .into_iter()
        .filter(|g| {
            if g.n() <= CANONICAL_ALIAS_MAX_N {
                by_code.insert(canonical_code(g))
            } else {
                by_text.insert(to_graph6(g))
            }
        })
        .collect();
    let dropped = before - kept.len();
    (kept, dropped)
}

/// Every graph on `1..=max_n` vertices up to isomorphism; connected only
/// unless `all` is set.
pub fn builtin_graphs(max_n: usize, all: bool) -> CliResult<Vec<Graph>> {
    if max_n > BUILTIN_MAX_N {
        return Err(CliError::capacity(format!(
            "built-in enumeration stops at {BUILTIN_MAX_N} vertices; pass a graph6 file for larger orders"
        )));
    }
    let per_n = if all { non_isomorphic_graphs } else { connected_graphs };
    Ok((1..=max_n).flat_map(per_n).collect())
}

/// Parses one graph6 record per nonblank line; `>>graph6<<` headers are skipped.
pub fn read_graph6_stream(text: &str) -> CliResult<Vec<Graph>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i, l.trim().trim_start_matches(">>graph6<<")))
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| parse_graph6(l).map_err(|e| CliError::from(e).context(format!("line {}", i + 1))))
        .collect()
}

pub fn hunt(graphs: Vec<Graph>, predicate: HuntPredicate, opts: &HuntOptions) -> CliResult<HuntReport> {
    let (graphs, duplicates) = dedup(graphs);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .map_err(|e| CliError::failure(format!("worker pool: {e}")))?;
    let evaluated: Vec<Evaluated> =
        pool.install(|| graphs.par_iter().map(|g| evaluate(g, predicate, opts.timeout)).collect());

    let mut summary = HuntSummary { predicate: predicate.to_string(), graphs: graphs.len(), duplicates, ..Default::default() };
    let mut best: Option<(usize, usize)> = None;
    let mut lines = Vec::new();
    for item in evaluated {
        match item {
            Evaluated::Skipped(s) => {
                summary.skipped += 1;
                lines.push(HuntLine::Skipped(s));
            }
            Evaluated::Solved { graph6, alpha, eviction, eternal } => {
                summary.solved += 1;
                let order = best.map_or(Ordering::Greater, |(be, ba)| (eviction * ba).cmp(&(be * alpha)));
                match order {
                    Ordering::Greater => {
                        best = Some((eviction, alpha));
                        summary.max_ratio_graphs = vec![graph6.clone()];
                    }
                    Ordering::Equal => summary.max_ratio_graphs.push(graph6.clone()),
                    Ordering::Less => {}
                }
                if let Some(value) = check(predicate, alpha, eviction, eternal) {
                    summary.findings += 1;
                    let predicate = predicate.to_string();
                    lines.push(HuntLine::Finding(Finding { graph6, alpha, eviction, eternal, predicate, value }));
                }
            }
        }
    }
    summary.max_ratio = best.map(|(e, a)| ratio_string(e, a));
    Ok(HuntReport { lines, summary })
}
