use std::fmt::Write as _;
use std::time::{Duration, Instant};

use evictlab::bounds::{bound_report_from_values, BoundCheck, BoundReport};
use evictlab::game::{
    attacker_certificate, eternal_domination_number_with, eviction_number_with, GameAnalysis, GameError, Limits, Rules,
};
use serde::{Deserialize, Serialize};

use crate::cache::{canonical_alias, Cache, CacheRecord};
use crate::error::{CliError, CliResult};
use crate::input::LoadedGraph;

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    pub timeout: Option<Duration>,
    pub skip_eternal: bool,
    pub cache: Option<Cache>,
}

impl SolveOptions {
    fn limits(&self) -> Limits {
        Limits { deadline: self.timeout.map(|t| Instant::now() + t), ..Limits::default() }
    }
}

/// A bound report flattened for printing; big numbers become decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveOutput {
    pub graph6: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub alpha: usize,
    pub gamma: usize,
    pub theta: usize,
    pub eviction: Option<usize>,
    pub eternal: Option<usize>,
    /// `eviction - 1` when that many guards lose.
    pub insufficient: Option<usize>,
    /// Interval holding the upper bound on c_alpha.
    pub c_alpha: Option<String>,
    pub f_alpha_bound: Option<String>,
    pub checks: Vec<BoundCheck>,
    pub cached: bool,
}

impl SolveOutput {
    fn new(input: &LoadedGraph, r: BoundReport, cached: bool) -> Self {
        SolveOutput {
            graph6: input.key.clone(),
            name: input.graph.name().map(str::to_string),
            n: r.n,
            alpha: r.alpha,
            gamma: r.gamma,
            theta: r.theta,
            eviction: r.eviction,
            eternal: r.eternal,
            insufficient: r.eviction.filter(|&e| e > 1).map(|e| e - 1),
            c_alpha: r.c_alpha.map(|c| {
                if c.is_exact() {
                    abbreviate(&c.lo.to_string())
                } else {
                    format!("[{}, {}]", abbreviate(&c.lo.to_string()), abbreviate(&c.hi.to_string()))
                }
            }),
            f_alpha_bound: r.f_alpha_bound.map(|f| abbreviate(&f.to_string())),
            checks: r.checks,
            cached,
        }
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn table(&self) -> String {
        let mut s = String::new();
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        let title = self.name.as_deref().unwrap_or(&self.graph6);
        let _ = writeln!(s, "graph        {title} ({} vertices)", self.n);
        let _ = writeln!(s, "graph6       {}", self.graph6);
        let _ = writeln!(s, "alpha        {}", self.alpha);
        let _ = writeln!(s, "gamma        {}", self.gamma);
        let _ = writeln!(s, "theta        {}", self.theta);
        let _ = writeln!(s, "eviction     {}", opt(self.eviction));
        let _ = writeln!(s, "eternal      {}", opt(self.eternal));
        if let Some(c) = &self.c_alpha {
            let _ = writeln!(s, "c_alpha      {c}");
        }
        if let Some(f) = &self.f_alpha_bound {
            let _ = writeln!(s, "f(alpha)     {f}");
        }
        for c in &self.checks {
            let _ = writeln!(s, "  [{}] {}", if c.holds { "ok" } else { "FAIL" }, c.name);
        }
        if let Some(k) = self.insufficient {
            let _ = writeln!(s, "{k} guards insufficient");
        }
        if self.cached {
            let _ = writeln!(s, "(from cache)");
        }
        s
    }
}

/// Long decimals keep their first and last digits.
fn abbreviate(digits: &str) -> String {
    const KEEP: usize = 24;
    if digits.len() <= 2 * KEEP + 8 {
        return digits.to_string();
    }
    format!("{}...{} ({} digits)", &digits[..KEEP], &digits[digits.len() - KEEP..], digits.len())
}

/// Exact eviction and eternal domination numbers with the bound report.
pub fn solve(input: &LoadedGraph, opts: &SolveOptions) -> CliResult<SolveOutput> {
    let g = &input.graph;
    let alias = canonical_alias(g);
    if let Some(cache) = &opts.cache {
        if let Some(hit) = cache.lookup(&input.key, alias.as_deref())? {
            if hit.eviction.is_some() && (opts.skip_eternal || hit.eternal.is_some()) {
                let eternal = if opts.skip_eternal { None } else { hit.eternal };
                let report = bound_report_from_values(g, hit.eviction, eternal);
                return Ok(SolveOutput::new(input, report, true));
            }
        }
    }
    let limits = opts.limits();
    let eviction = eviction_number_with(g, &limits).map_err(|e| CliError::from(e).context("eviction number"))?;
    let eternal = if opts.skip_eternal {
        None
    } else {
        Some(eternal_domination_number_with(g, &limits).map_err(|e| CliError::from(e).context("eternal domination number"))?)
    };
    let report = bound_report_from_values(g, Some(eviction), eternal);
    if let Some(cache) = &opts.cache {
        cache.insert(CacheRecord::from_report(&input.key, g, &report))?;
    }
    Ok(SolveOutput::new(input, report, false))
}

/// Outcome of the game with a fixed number of guards.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixedKOutput {
    pub graph6: String,
    pub rules: Rules,
    pub k: usize,
    pub defender_wins: bool,
    pub safe_configurations: usize,
    /// Attacks the attacker needs at most, when the attacker wins.
    pub certificate_depth: Option<u32>,
}

impl FixedKOutput {
    pub fn table(&self) -> String {
        let rules = match self.rules {
            Rules::Eviction => "eviction",
            Rules::EternalDomination => "eternal domination",
        };
        let verdict = match self.certificate_depth {
            None => format!("defender wins; {} safe configurations", self.safe_configurations),
            Some(d) => format!("attacker wins within {d} attacks; {} guards insufficient", self.k),
        };
        format!("{} {rules} with {} guards: {verdict}\n", self.graph6, self.k)
    }
}

pub fn solve_fixed_k(input: &LoadedGraph, k: usize, rules: Rules, opts: &SolveOptions) -> CliResult<FixedKOutput> {
    let g = &input.graph;
    let limits = opts.limits();
    let analysis = GameAnalysis::new(g, k, rules, &limits)?;
    let certificate_depth = if analysis.defender_wins() {
        None
    } else {
        match attacker_certificate(g, k, rules, &limits) {
            Ok(c) => Some(c.depth()),
            Err(GameError::DefenderWins { .. }) => None,
            Err(e) => return Err(e.into()),
        }
    };
    Ok(FixedKOutput {
        graph6: input.key.clone(),
        rules,
        k,
        defender_wins: analysis.defender_wins(),
        safe_configurations: analysis.safe_set().len(),
        certificate_depth,
    })
}

/// `graph6 eviction` on one line.
pub fn g6_line(out: &SolveOutput) -> String {
    let e = out.eviction.map_or("-".to_string(), |e| e.to_string());
    format!("{} {e}\n", out.graph6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::GraphSource;

    fn load(spec: &str) -> LoadedGraph {
        GraphSource::family(spec).load().unwrap()
    }

    #[test]
    fn c7_table_mentions_insufficiency() {
        let out = solve(&load("cycle:7"), &SolveOptions::default()).unwrap();
        assert_eq!((out.alpha, out.eviction, out.insufficient), (3, Some(4), Some(3)));
        assert!(out.all_hold());
        assert!(out.table().contains("3 guards insufficient"));
        assert!(!out.cached);
    }

    #[test]
    fn single_vertex_has_nothing_insufficient() {
        let out = solve(&load("path:1"), &SolveOptions::default()).unwrap();
        assert_eq!((out.eviction, out.insufficient), (Some(1), None));
    }

    #[test]
    fn fixed_k_on_c7() {
        let lost = solve_fixed_k(&load("cycle:7"), 3, Rules::Eviction, &SolveOptions::default()).unwrap();
        assert!(!lost.defender_wins);
        assert!(lost.certificate_depth.is_some_and(|d| d >= 1));
        let held = solve_fixed_k(&load("cycle:7"), 4, Rules::Eviction, &SolveOptions::default()).unwrap();
        assert!(held.defender_wins && held.certificate_depth.is_none());
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let opts = SolveOptions { cache: Some(Cache::new(dir.path().join("c.jsonl"))), ..Default::default() };
        let first = solve(&load("cycle:7"), &opts).unwrap();
        let second = solve(&load("cycle:7"), &opts).unwrap();
        assert!(!first.cached && second.cached);
        assert_eq!(first.eviction, second.eviction);
        assert_eq!(first.eternal, second.eternal);
    }

    #[test]
    fn zero_timeout_reports_timeout() {
        let opts = SolveOptions { timeout: Some(Duration::ZERO), ..Default::default() };
        let err = solve(&load("gk:1"), &opts).unwrap_err();
        assert_eq!(err.code(), crate::error::EXIT_TIMEOUT);
    }

    #[test]
    fn long_numbers_are_abbreviated() {
        assert_eq!(abbreviate("12345"), "12345");
        let long = "9".repeat(100);
        assert!(abbreviate(&long).ends_with("(100 digits)"));
    }
}
