//! Command-line front end for evictlab: solving, verification suites,
//! counterexample hunts, an interactive game and a result cache.

pub mod cache;
pub mod error;
pub mod hunt;
pub mod input;
pub mod play;
pub mod solve;
pub mod verify;

use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use evictlab::game::Rules;
use evictlab::graph::{to_edge_list, to_graph6};

use cache::{sample_indices, Cache};
use error::{CliError, CliResult, EXIT_FAILURE};
use hunt::{HuntOptions, HuntPredicate};
use input::{parse_family, GraphSource};
use play::Role;
use solve::SolveOptions;

#[derive(Parser, Debug)]
#[command(name = "evictlab", version, about = "Exact eviction and eternal domination games on small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    G6,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RulesArg {
    Eviction,
    Eternal,
}

impl From<RulesArg> for Rules {
    fn from(r: RulesArg) -> Rules {
        match r {
            RulesArg::Eviction => Rules::Eviction,
            RulesArg::Eternal => Rules::EternalDomination,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct CacheArgs {
    /// Cache file (JSON lines); defaults to ~/.cache/evictlab/cache.jsonl
    #[arg(long, value_name = "PATH", env = "EVICTLAB_CACHE", global = true)]
    pub cache: Option<PathBuf>,
    /// Neither read nor write the cache
    #[arg(long, global = true)]
    pub no_cache: bool,
}

impl CacheArgs {
    pub fn resolve(&self) -> Option<Cache> {
        if self.no_cache {
            return None;
        }
        self.cache.clone().or_else(Cache::default_path).map(Cache::new)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact game numbers and bound checks for one graph
    Solve {
        #[command(flatten)]
        source: GraphSource,
        /// Decide the game for this many guards only
        #[arg(long)]
        k: Option<usize>,
        /// Game played with --k
        #[arg(long, value_enum, default_value = "eviction")]
        rules: RulesArg,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Time limit for the whole solve
        #[arg(long)]
        timeout_ms: Option<u64>,
        /// Skip the eternal domination number
        #[arg(long)]
        skip_eternal: bool,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Run a named verification suite, or `all`
    Verify {
        suite: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Search graphs for a predicate and stream findings as JSON lines
    Hunt {
        /// ratio-exceeds(p/q), alpha3-eviction5 or eternal-lt-eviction
        #[arg(long)]
        predicate: String,
        /// graph6 file, one record per line (`-` for stdin); omit for the built-in enumeration
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
        /// Largest order of the built-in enumeration (at most 7)
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Include disconnected graphs in the built-in enumeration
        #[arg(long)]
        all: bool,
        /// Worker threads; defaults to the number of CPUs
        #[arg(long, env = "EVICTLAB_WORKERS")]
        workers: Option<usize>,
        /// Time limit per graph
        #[arg(long, default_value_t = 10_000)]
        timeout_ms: u64,
    },
    /// Play the eviction game against the engine
    Play {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum)]
        role: Role,
        #[arg(long)]
        k: usize,
    },
    /// Print a named family as graph6 (g6), an edge list (table) or JSON
    Generate {
        spec: String,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
    },
    /// Inspect or maintain the result cache
    Cache {
        #[command(subcommand)]
        action: CacheAction,
        #[command(flatten)]
        cache: CacheArgs,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum CacheAction {
    /// Print every record as JSON lines
    List,
    /// Delete the cache file
    Clear,
    /// Re-solve a spread-out sample of records and compare
    Verify {
        #[arg(long, default_value_t = 5)]
        sample: usize,
    },
}

/// Runs one command; the result is the process exit code.
pub fn run<R: BufRead, W: Write, E: Write>(cli: Cli, stdin: R, out: &mut W, err: &mut E) -> CliResult<u8> {
    match cli.command {
        Command::Solve { source, k, rules, format, timeout_ms, skip_eternal, cache } => {
            let input = source.load()?;
            let opts = SolveOptions { timeout: timeout_ms.map(Duration::from_millis), skip_eternal, cache: cache.resolve() };
            if let Some(k) = k {
                let res = solve::solve_fixed_k(&input, k, rules.into(), &opts)?;
                match format {
                    Format::Json => writeln!(out, "{}", serde_json::to_string(&res)?)?,
                    Format::Table | Format::G6 => write!(out, "{}", res.table())?,
                }
                return Ok(0);
            }
            let res = solve::solve(&input, &opts)?;
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&res)?)?,
                Format::Table => write!(out, "{}", res.table())?,
                Format::G6 => write!(out, "{}", solve::g6_line(&res))?,
            }
            if !res.all_hold() {
                writeln!(err, "a bound check failed")?;
                return Ok(EXIT_FAILURE);
            }
            Ok(0)
        }
        Command::Verify { suite, format } => {
            let results = verify::run(&suite)?;
            for r in &results {
                match format {
                    Format::Json => writeln!(out, "{}", serde_json::to_string(r)?)?,
                    Format::Table | Format::G6 => writeln!(out, "{}", r.line())?,
                }
            }
            let failed = results.iter().filter(|r| !r.pass).count();
            writeln!(err, "{suite}: {} checks, {failed} failed", results.len())?;
            Ok(if failed == 0 { 0 } else { EXIT_FAILURE })
        }
        Command::Hunt { predicate, input, max_n, all, workers, timeout_ms } => {
            let predicate: HuntPredicate = predicate.parse().map_err(CliError::parse)?;
            let graphs = match input {
                None => hunt::builtin_graphs(max_n, all)?,
                Some(path) if path.as_os_str() == "-" => {
                    let mut text = String::new();
                    for line in stdin.lines() {
                        text.push_str(&line?);
                        text.push('\n');
                    }
                    hunt::read_graph6_stream(&text)?
                }
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| CliError::from(e).context(format!("reading {}", path.display())))?;
                    hunt::read_graph6_stream(&text)?
                }
            };
            let workers = workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let opts = HuntOptions { workers, timeout: Some(Duration::from_millis(timeout_ms)) };
            let report = hunt::hunt(graphs, predicate, &opts)?;
            for line in &report.lines {
                if let hunt::HuntLine::Skipped(s) = line {
                    writeln!(err, "skipped {}: {}", s.graph6, s.skipped)?;
                }
            }
            write!(out, "{}", report.to_json_lines())?;
            Ok(0)
        }
        Command::Play { source, role, k } => {
            let input = source.load()?;
            let outcome = play::play(&input.graph, k, role, stdin, &mut *out)?;
            writeln!(err, "{outcome:?}")?;
            Ok(0)
        }
        Command::Generate { spec, format } => {
            let g = parse_family(&spec)?;
            match format {
                Format::G6 => writeln!(out, "{}", to_graph6(&g))?,
                Format::Table => write!(out, "{}", to_edge_list(&g))?,
                Format::Json => writeln!(out, "{}", serde_json::to_string(&g.to_json())?)?,
            }
            Ok(0)
        }
        Command::Cache { action, cache } => {
            let cache = cache.resolve().ok_or_else(|| CliError::parse("no cache path; pass --cache PATH"))?;
            match action {
                CacheAction::List => {
                    for r in cache.load()? {
                        writeln!(out, "{}", serde_json::to_string(&r)?)?;
                    }
                    Ok(0)
                }
                CacheAction::Clear => {
                    let n = cache.clear()?;
                    writeln!(out, "removed {n} records from {}", cache.path().display())?;
                    Ok(0)
                }
                CacheAction::Verify { sample } => {
                    let records = cache.load()?;
                    let mut failed = 0;
                    let picked = sample_indices(records.len(), sample);
                    for &i in &picked {
                        match records[i].recheck() {
                            Ok(()) => writeln!(out, "PASS {}", records[i].graph6)?,
                            Err(why) => {
                                failed += 1;
                                writeln!(out, "FAIL {why}")?;
                            }
                        }
                    }
                    writeln!(err, "{} of {} records checked, {failed} failed", picked.len(), records.len())?;
                    Ok(if failed == 0 { 0 } else { EXIT_FAILURE })
                }
            }
        }
    }
}
