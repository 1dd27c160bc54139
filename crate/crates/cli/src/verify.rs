//! Named verification suites re-deriving known game values.

use std::time::Instant;

use evictlab::bounds::{brute_force_ramsey, c_bound, f_bound, l_chain, s_cascade_bound, Interval};
use evictlab::game::{
    attacker_certificate, eternal_domination_number, eviction_number, eviction_safe_set, extract_eviction_family,
    simulate, verify_eviction_family, GameAnalysis, GameError, Limits, RandomAttacker, Rules,
};
use evictlab::graph::{non_isomorphic_graphs, to_graph6};
use evictlab::invariants::{clique_cover_number, domination_number, independence_number, is_triangle_free};
use evictlab::strategies::{
    composite_defense, find_ramsey_array, matching_defend, matching_init, ramsey_defend, ramsey_domination_witness,
    MatchingMove,
};
use evictlab::{Graph, VertexSet};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::input::parse_family;

pub const SUITES: [&str; 10] = [
    "paths",
    "cycles",
    "bipartite",
    "gk",
    "anomaly",
    "spider",
    "bounds-chain",
    "monotonicity",
    "small-alpha",
    "strategies",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckResult {
    pub suite: String,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    pub fn line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            format!("{status} {}: {}", self.suite, self.name)
        } else {
            format!("{status} {}: {} ({})", self.suite, self.name, self.detail)
        }
    }
}

struct Checks {
    suite: &'static str,
    out: Vec<CheckResult>,
}

impl Checks {
    fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.out.push(CheckResult { suite: self.suite.into(), name: name.into(), pass, detail: detail.into() });
    }

    fn expect_eq<T: PartialEq + std::fmt::Debug>(&mut self, name: impl Into<String>, got: T, want: T) {
        let pass = got == want;
        let detail = if pass { format!("{got:?}") } else { format!("got {got:?}, expected {want:?}") };
        self.push(name, pass, detail);
    }
}

fn gen(spec: &str) -> CliResult<Graph> {
    parse_family(spec)
}

fn e(spec: &str) -> CliResult<usize> {
    Ok(eviction_number(&gen(spec)?)?)
}

/// Runs one suite, or every suite for `all`.
pub fn run(suite: &str) -> CliResult<Vec<CheckResult>> {
    if suite == "all" {
        let mut out = Vec::new();
        for s in SUITES {
            out.extend(run(s)?);
        }
        return Ok(out);
    }
    let name = SUITES
        .iter()
        .copied()
        .find(|s| *s == suite)
        .ok_or_else(|| CliError::parse(format!("unknown suite {suite:?}; expected one of {} or all", SUITES.join(", "))))?;
    let mut c = Checks { suite: name, out: Vec::new() };
    match name {
        "paths" => paths(&mut c)?,
        "cycles" => cycles(&mut c)?,
        "bipartite" => bipartite(&mut c)?,
        "gk" => gk(&mut c)?,
        "anomaly" => anomaly(&mut c)?,
        "spider" => spider(&mut c)?,
        "bounds-chain" => bounds_chain(&mut c)?,
        "monotonicity" => monotonicity(&mut c)?,
        "small-alpha" => small_alpha(&mut c)?,
        "strategies" => strategies(&mut c)?,
        _ => unreachable!("suite list and dispatch agree"),
    }
    Ok(c.out)
}

fn paths(c: &mut Checks) -> CliResult<()> {
    for n in 1..=12usize {
        c.expect_eq(format!("e(P{n}) = ceil({n}/2)"), e(&format!("path:{n}"))?, n.div_ceil(2));
    }
    Ok(())
}

fn cycles(c: &mut Checks) -> CliResult<()> {
    c.expect_eq("e(C3) = 1", e("cycle:3")?, 1);
    c.expect_eq("e(C5) = 2", e("cycle:5")?, 2);
    for n in [4usize, 6, 7, 8, 9, 10, 11, 12] {
        c.expect_eq(format!("e(C{n}) = ceil({n}/2)"), e(&format!("cycle:{n}"))?, n.div_ceil(2));
    }
    let c7 = gen("cycle:7")?;
    let ratio = (eviction_number(&c7)?, independence_number(&c7).0);
    c.expect_eq("e(C7)/alpha(C7) = 4/3", ratio, (4, 3));
    Ok(())
}

fn bipartite(c: &mut Checks) -> CliResult<()> {
    for m in 1..=5 {
        for n in m..=10 - m {
            c.expect_eq(format!("e(K{m},{n}) = {n}"), e(&format!("bipartite:{m},{n}"))?, n);
        }
    }
    Ok(())
}

fn gk(c: &mut Checks) -> CliResult<()> {
    for k in 1..=2 {
        let g = gen(&format!("gk:{k}"))?;
        c.expect_eq(format!("G{k} has {} vertices", 7 * k + 2), g.n(), 7 * k + 2);
        c.expect_eq(format!("alpha(G{k}) = {}", 3 * k + 1), independence_number(&g).0, 3 * k + 1);
        c.expect_eq(format!("theta(G{k}) = {}", 4 * k + 1), clique_cover_number(&g).0, 4 * k + 1);
        c.expect_eq(format!("e(G{k}) = {}", 4 * k + 1), eviction_number(&g)?, 4 * k + 1);
    }
    Ok(())
}

fn anomaly(c: &mut Checks) -> CliResult<()> {
    for t in 2..=3 {
        c.expect_eq(format!("t = {t} before the bridge"), e(&format!("anomaly:{t}"))?, 2);
        c.expect_eq(format!("t = {t} after the bridge"), e(&format!("anomaly-bridged:{t}"))?, t + 1);
    }
    for m in 3..=6 {
        let g = gen(&format!("universal-pair:{m}"))?;
        c.expect_eq(format!("universal pair m = {m}: (alpha, e)"), (independence_number(&g).0, eviction_number(&g)?), (m, 1));
    }
    let g2p = gen("g2prime")?;
    match attacker_certificate(&g2p, 4, Rules::Eviction, &Limits::default()) {
        Ok(cert) => {
            let verdict = cert.verify(&g2p);
            c.push("G2' falls to a 4-guard certificate", verdict.is_ok(), verdict.err().unwrap_or_default());
        }
        Err(err) => c.push("G2' falls to a 4-guard certificate", false, err.to_string()),
    }
    let safe = eviction_safe_set(&gen("g2")?, 4)?;
    c.push("G2 holds with 4 guards", !safe.is_empty(), format!("{} safe configurations", safe.len()));
    Ok(())
}

fn spider(c: &mut Checks) -> CliResult<()> {
    for k in 2..=4 {
        c.expect_eq(format!("e(Sp(2;{k})) = {}", k + 1), e(&format!("spider:{k}"))?, k + 1);
    }
    Ok(())
}

fn bounds_chain(c: &mut Checks) -> CliResult<()> {
    let exact = |vals: &[u32]| vals.iter().map(|&v| Interval::exact(v)).collect::<Vec<_>>();
    let chain = |k| l_chain(k).map_err(|e| CliError::failure(e));
    c.expect_eq("l_chain(1)", chain(1)?, exact(&[2, 2]));
    c.expect_eq("l_chain(2)", chain(2)?, exact(&[3, 6, 18]));
    c.expect_eq("c_2 <= 18", c_bound(2).ok().and_then(|i| i.value().cloned()), Some(BigUint::from(18u32)));
    c.expect_eq("f(1) = 1", f_bound(1, &BigUint::from(1u32)).ok(), Some(BigUint::from(1u32)));
    c.expect_eq("f(2) = 72 at c = 18", f_bound(2, &BigUint::from(18u32)).ok(), Some(BigUint::from(72u32)));
    let three = chain(3)?;
    let increasing = three.windows(2).all(|w| w[0].lo < w[1].lo && w[0].hi < w[1].hi);
    c.push("l_chain(3) increases", increasing, format!("c_3 in {}", three[3]));
    let cascade = s_cascade_bound(2, &BigUint::from(18u32), 0).ok();
    c.expect_eq("cascade caps at k = 2", cascade, Some((BigUint::from(36u32), BigUint::from(36u32))));
    let start = Instant::now();
    let r33 = brute_force_ramsey(3, 3, 6);
    c.push("r(3,3) = 6 by exhaustive 2-colouring", r33 == Some(6), format!("{r33:?} in {:.2?}", start.elapsed()));
    Ok(())
}

fn graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(non_isomorphic_graphs).collect()
}

fn monotonicity(c: &mut Checks) -> CliResult<()> {
    let graphs = graphs_up_to(6);
    for rules in [Rules::Eviction, Rules::EternalDomination] {
        let mut bad = Vec::new();
        for g in &graphs {
            let mut won = false;
            for k in 1..=g.n() {
                let wins = GameAnalysis::new(g, k, rules, &Limits::default())?.defender_wins();
                if won && !wins {
                    bad.push(format!("{} at k = {k}", to_graph6(g)));
                }
                won |= wins;
            }
        }
        let detail = if bad.is_empty() { format!("{} graphs", graphs.len()) } else { bad.join("; ") };
        c.push(format!("{rules:?} safe sets grow with k on graphs n <= 6"), bad.is_empty(), detail);
    }
    Ok(())
}

fn small_alpha(c: &mut Checks) -> CliResult<()> {
    let graphs = graphs_up_to(6);
    let mut bad: Vec<Vec<String>> = vec![Vec::new(); 4];
    for g in &graphs {
        let tag = to_graph6(g);
        let alpha = independence_number(g).0;
        let ev = eviction_number(g)?;
        let ed = eternal_domination_number(g)?;
        if !(domination_number(g).0 <= ev && ev <= clique_cover_number(g).0) {
            bad[0].push(tag.clone());
        }
        if is_triangle_free(g) && ev < alpha {
            bad[1].push(tag.clone());
        }
        let cap = match alpha {
            1 => 1,
            2 => 2,
            3 => 5,
            _ => usize::MAX,
        };
        if ev > cap {
            bad[2].push(format!("{tag}: alpha {alpha}, e {ev}"));
        }
        if !(alpha <= ed && ed <= alpha * (alpha + 1) / 2) {
            bad[3].push(format!("{tag}: alpha {alpha}, eternal {ed}"));
        }
    }
    let names = [
        "gamma <= e <= theta",
        "triangle-free graphs need alpha guards",
        "alpha 1, 2, 3 cap e at 1, 2, 5",
        "alpha <= eternal <= C(alpha+1, 2)",
    ];
    for (name, b) in names.into_iter().zip(bad) {
        let detail = if b.is_empty() { format!("{} graphs n <= 6", graphs.len()) } else { b.join("; ") };
        c.push(name, b.is_empty(), detail);
    }
    Ok(())
}

fn strategies(c: &mut Checks) -> CliResult<()> {
    const ATTACKS: usize = 2_000;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 2..=3 {
        let g = gen(&format!("copies({k},complete:{})", k + 1))?;
        let name = format!("array defence on {k}K{}", k + 1);
        let Some(arr) = find_ramsey_array(&g) else {
            c.push(name, false, "no array found");
            continue;
        };
        let mut guards = arr.initial_guards();
        let mut problem = None;
        for step in 0..ATTACKS {
            let a = guards.iter().nth(rng.gen_range(0..guards.len())).expect("guards exist");
            let next = ramsey_defend(&arr, guards, a)?;
            let to = (next - guards).first();
            if !to.is_some_and(|t| arr.column_of(t) == arr.column_of(a)) {
                problem = Some(format!("step {step}: guard on {a} left its column"));
            } else if !g.is_dominating(next) || ramsey_domination_witness(&arr, next).is_err() {
                problem = Some(format!("step {step}: domination lost"));
            }
            if problem.is_some() {
                break;
            }
            guards = next;
        }
        c.push(name, problem.is_none(), problem.unwrap_or_else(|| format!("{ATTACKS} attacks")));
    }

    let mut bad = Vec::new();
    for region in 0..20 {
        let n = rng.gen_range(2..=12);
        let g = Graph::random(n, rng.gen_range(0.15..0.6), &mut rng)?;
        let s = VertexSet::from_bits(rng.gen::<u64>()) & g.vertices();
        let mut st = matching_init(&g, s)?;
        for _ in 0..if st.guarded.is_empty() { 0 } else { ATTACKS } {
            let a = st.guarded.iter().nth(rng.gen_range(0..st.guards())).expect("guards exist");
            match matching_defend(&st, &g, a, VertexSet::EMPTY)? {
                (_, MatchingMove::Escape { .. }) => bad.push(format!("region {region}: escape")),
                (next, _) => st = next,
            }
            if let Err(err) = st.check(&g) {
                bad.push(format!("region {region}: {err}"));
                break;
            }
        }
    }
    c.push("matching defence on 20 random regions", bad.is_empty(), bad.join("; "));

    let c7 = gen("cycle:7")?;
    let mut family = extract_eviction_family(&c7, 4)?;
    let verdict = verify_eviction_family(&c7, &family);
    c.push("C7 family with 4 guards verifies", verdict.is_ok(), verdict.err().map(|v| v.to_string()).unwrap_or_default());
    let start = *family.family.iter().next().expect("family is nonempty");
    let run = simulate(&c7, Rules::Eviction, &mut family, start, &mut RandomAttacker::new(3), ATTACKS);
    c.push("C7 family survives random attacks", run.violation.is_none(), format!("{} steps", run.steps.len()));
    match attacker_certificate(&c7, 3, Rules::Eviction, &Limits::default()) {
        Ok(cert) => c.push("C7 certificate with 3 guards verifies", cert.verify(&c7).is_ok(), format!("depth {}", cert.depth())),
        Err(GameError::DefenderWins { .. }) => c.push("C7 certificate with 3 guards verifies", false, "defender wins"),
        Err(err) => return Err(err.into()),
    }

    let mut edges = gen("copies(2,complete:4)")?.edges();
    edges.push((0, 8));
    let g = Graph::from_edges(9, &edges)?;
    match composite_defense(&g) {
        Some(mut plan) => {
            let (guards, start) = (plan.guards(), plan.initial);
            let run = simulate(&g, Rules::Eviction, &mut plan, start, &mut RandomAttacker::new(5), ATTACKS);
            c.push("composite defence on 2K4 plus a pendant", run.violation.is_none(), format!("{guards} guards"));
        }
        None => c.push("composite defence on 2K4 plus a pendant", false, "no plan"),
    }
    Ok(())
}
