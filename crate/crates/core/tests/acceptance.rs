//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use evictlab::bounds::{brute_force_ramsey, f_bound, l_chain, Interval};
use evictlab::game::{
    attacker_certificate, eternal_domination_number, eviction_number, eviction_safe_set, reference, safe_set,
    GameAnalysis, Limits, Rules,
};
use evictlab::graph::non_isomorphic_graphs;
use evictlab::invariants::{clique_cover_number, domination_number, independence_number, is_triangle_free};
use evictlab::strategies::{
    find_ramsey_array, matching_defend, matching_init, ramsey_defend, ramsey_domination_witness, MatchingMove,
};
use evictlab::{FamilySpec, Graph, VertexSet};

fn gen(spec: &str) -> Graph {
    spec.parse::<FamilySpec>().expect("valid family").generate().expect("family builds")
}

fn e(spec: &str) -> usize {
    eviction_number(&gen(spec)).expect("solver succeeds")
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn check(failures: &mut Vec<String>, ok: bool, what: String) {
    if !ok {
        failures.push(what);
    }
}

fn summarize(failures: Vec<String>, good: String) -> Outcome {
    if failures.is_empty() {
        Outcome { ok: true, detail: good }
    } else {
        let shown: Vec<_> = failures.iter().take(5).cloned().collect();
        Outcome { ok: false, detail: format!("{} failures: {}", failures.len(), shown.join("; ")) }
    }
}

fn paths() -> Outcome {
    let mut f = Vec::new();
    for n in 1..=12usize {
        let got = e(&format!("path:{n}"));
        check(&mut f, got == n.div_ceil(2), format!("P{n}: got {got}"));
    }
    summarize(f, "e(Pn) = ceil(n/2) for n = 1..12".into())
}

fn cycles() -> Outcome {
    let mut f = Vec::new();
    check(&mut f, e("cycle:3") == 1, "C3 != 1".into());
    check(&mut f, e("cycle:5") == 2, "C5 != 2".into());
    for n in [4usize, 6, 7, 8, 9, 10, 11, 12] {
        let got = e(&format!("cycle:{n}"));
        check(&mut f, got == n.div_ceil(2), format!("C{n}: got {got}"));
    }
    summarize(f, "C3 = 1, C5 = 2, Cn = ceil(n/2) otherwise".into())
}

fn bipartite() -> Outcome {
    let mut f = Vec::new();
    let mut count = 0;
    for m in 1..=5 {
        for n in m..=10 - m {
            let got = e(&format!("bipartite:{m},{n}"));
            check(&mut f, got == n, format!("K{m},{n}: got {got}"));
            count += 1;
        }
    }
    summarize(f, format!("e(K_m,n) = max(m,n) on {count} pairs"))
}

fn gk_construction() -> Outcome {
    let mut f = Vec::new();
    for k in 1..=2 {
        let g = gen(&format!("gk:{k}"));
        let alpha = independence_number(&g).0;
        let theta = clique_cover_number(&g).0;
        let ev = eviction_number(&g).expect("solver succeeds");
        check(&mut f, alpha == 3 * k + 1, format!("alpha(G{k}) = {alpha}"));
        check(&mut f, theta == 4 * k + 1, format!("theta(G{k}) = {theta}"));
        check(&mut f, ev == 4 * k + 1, format!("e(G{k}) = {ev}"));
        if k == 2 {
            let a = GameAnalysis::new(&g, 9, Rules::Eviction, &Limits::default()).expect("solves");
            let configs = (0u64..1 << 16).filter(|b| b.count_ones() == 9).count();
            check(&mut f, g.n() == 16 && configs == 11440, "G2 size".into());
            check(&mut f, a.defender_wins(), "nine guards lose on G2".into());
        }
    }
    summarize(f, "alpha = 3k+1, e = theta = 4k+1 for k = 1, 2 (16 vertices, 11440 nine-sets)".into())
}

fn ratio() -> Outcome {
    let g = gen("cycle:7");
    let (a, ev) = (independence_number(&g).0, eviction_number(&g).expect("solves"));
    let ok = 3 * ev == 4 * a && a == 3;
    Outcome { ok, detail: format!("e(C7)/alpha(C7) = {ev}/{a}") }
}

fn anomaly() -> Outcome {
    let mut f = Vec::new();
    for t in 2..=3 {
        let plain = e(&format!("anomaly:{t}"));
        let bridged = e(&format!("anomaly-bridged:{t}"));
        check(&mut f, plain == 2, format!("t={t}: without bridge {plain}"));
        check(&mut f, bridged == t + 1, format!("t={t}: with bridge {bridged}"));
    }
    summarize(f, "2 guards before the bridge edge, t+1 after, t = 2, 3".into())
}

fn spider() -> Outcome {
    let mut f = Vec::new();
    for k in 2..=4 {
        let got = e(&format!("spider:{k}"));
        check(&mut f, got == k + 1, format!("Sp(2;{k}) = {got}"));
    }
    summarize(f, "e(Sp(2;k)) = k+1 for k = 2, 3, 4".into())
}

fn g2_anomaly() -> Outcome {
    let mut f = Vec::new();
    let g2p = gen("g2prime");
    match attacker_certificate(&g2p, 4, Rules::Eviction, &Limits::default()) {
        Ok(cert) => check(&mut f, cert.verify(&g2p).is_ok(), "certificate does not verify".into()),
        Err(err) => f.push(format!("no certificate: {err}")),
    }
    let g2 = gen("g2");
    let safe = eviction_safe_set(&g2, 4).expect("solves");
    check(&mut f, !safe.is_empty(), "G2 with 4 guards has an empty safe set".into());
    let exact = eviction_number(&g2p).map_or_else(|e| e.to_string(), |v| v.to_string());
    summarize(f, format!("G2' certificate at k=4 verified; G2 safe set has {} members; e(G2') = {exact}", safe.len()))
}

fn universal_pair() -> Outcome {
    let mut f = Vec::new();
    for m in 3..=6 {
        let g = gen(&format!("universal-pair:{m}"));
        let a = independence_number(&g).0;
        let ev = eviction_number(&g).expect("solves");
        check(&mut f, a == m && ev == 1, format!("m={m}: alpha {a}, e {ev}"));
    }
    summarize(f, "e(K2 join mK1) = 1 with alpha = m for m = 3..6".into())
}

fn property_suite() -> Outcome {
    let mut graphs: Vec<Graph> = (1..=6).flat_map(non_isomorphic_graphs).collect();
    let exhaustive = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..200 {
        let n = 7 + i % 2;
        let p = rng.gen_range(0.2..0.8);
        graphs.push(Graph::random(n, p, &mut rng).expect("small graph"));
    }
    let mut f = Vec::new();
    for g in &graphs {
        let tag = evictlab::graph::to_graph6(g);
        let alpha = independence_number(g).0;
        let gamma = domination_number(g).0;
        let theta = clique_cover_number(g).0;
        let wins: Vec<bool> = (1..=g.n())
            .map(|k| GameAnalysis::new(g, k, Rules::Eviction, &Limits::default()).expect("solves").defender_wins())
            .collect();
        if wins.windows(2).any(|w| w[0] && !w[1]) {
            f.push(format!("{tag}: monotonicity"));
        }
        let ev = match eviction_number(g) {
            Ok(v) => v,
            Err(err) => {
                f.push(format!("{tag}: {err}"));
                continue;
            }
        };
        check(&mut f, wins.iter().position(|&w| w) == Some(ev - 1), format!("{tag}: least winning k"));
        check(&mut f, gamma <= ev && ev <= theta, format!("{tag}: gamma/theta chain"));
        check(&mut f, !is_triangle_free(g) || ev >= alpha, format!("{tag}: triangle-free"));
        let small = match alpha {
            1 => ev == 1,
            2 => ev <= 2,
            3 => ev <= 5,
            _ => true,
        };
        check(&mut f, small, format!("{tag}: alpha {alpha} gives e {ev}"));
        match eternal_domination_number(g) {
            Ok(ed) => check(&mut f, alpha <= ed && ed <= alpha * (alpha + 1) / 2, format!("{tag}: eternal {ed}")),
            Err(err) => f.push(format!("{tag}: {err}")),
        }
    }
    summarize(f, format!("{exhaustive} graphs n <= 6 and 200 random n in {{7,8}}: zero violations"))
}

fn oracle_equivalence() -> Outcome {
    let mut f = Vec::new();
    let mut cases = 0;
    for n in 1..=6 {
        for g in non_isomorphic_graphs(n) {
            for k in 1..=n {
                for rules in [Rules::Eviction, Rules::EternalDomination] {
                    let fast = safe_set(&g, k, rules, &Limits::default()).expect("solves").members;
                    let slow = reference::naive_safe_set(&g, k, rules);
                    cases += 1;
                    if fast != slow {
                        f.push(format!("{} k={k} {rules:?}", evictlab::graph::to_graph6(&g)));
                    }
                }
            }
        }
    }
    summarize(f, format!("{cases} (graph, k, rules) cases agree"))
}

fn strategy_simulation() -> Outcome {
    let mut f = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for k in 2..=3 {
        let g = gen(&format!("copies({k},complete:{})", k + 1));
        let Some(arr) = find_ramsey_array(&g) else {
            f.push(format!("no array for {k}K{}", k + 1));
            continue;
        };
        let mut c = arr.initial_guards();
        for step in 0..10_000 {
            let a = c.iter().nth(rng.gen_range(0..c.len())).expect("guards exist");
            match ramsey_defend(&arr, c, a) {
                Ok(next) => {
                    let to = (next - c).first();
                    let in_column = to.is_some_and(|t| arr.column_of(t) == arr.column_of(a) && !c.contains(t));
                    check(&mut f, in_column, format!("k={k} step {step}: no in-column move"));
                    c = next;
                }
                Err(err) => f.push(format!("k={k} step {step}: {err}")),
            }
            check(&mut f, g.is_dominating(c), format!("k={k} step {step}: not dominating"));
            check(&mut f, ramsey_domination_witness(&arr, c).is_ok(), format!("k={k} step {step}: no full row"));
        }
    }
    for region in 0..50 {
        let n = rng.gen_range(2..=12);
        let g = Graph::random(n, rng.gen_range(0.15..0.6), &mut rng).expect("small graph");
        let s = VertexSet::from_bits(rng.gen::<u64>()) & g.vertices();
        let mut st = matching_init(&g, s).expect("matching fits");
        if st.guarded.is_empty() {
            continue;
        }
        for step in 0..10_000 {
            let a = st.guarded.iter().nth(rng.gen_range(0..st.guards())).expect("guards exist");
            match matching_defend(&st, &g, a, VertexSet::EMPTY) {
                Ok((_, MatchingMove::Escape { .. })) => f.push(format!("region {region} step {step}: escape")),
                Ok((next, _)) => st = next,
                Err(err) => f.push(format!("region {region} step {step}: {err}")),
            }
            if let Err(err) = st.check(&g) {
                f.push(format!("region {region} step {step}: {err}"));
            }
        }
    }
    summarize(f, "array defence on 2K3 and 3K4, matching defence on 50 regions, 10^4 attacks each".into())
}

fn bounds_arithmetic() -> Outcome {
    let mut f = Vec::new();
    let chain = l_chain(2).expect("chain");
    let want: Vec<Interval> = [3u32, 6, 18].into_iter().map(Interval::exact).collect();
    check(&mut f, chain == want, format!("l_chain(2) = {chain:?}"));
    check(&mut f, f_bound(1, &BigUint::from(1u32)).ok() == Some(BigUint::from(1u32)), "f(1)".into());
    check(&mut f, f_bound(2, &BigUint::from(18u32)).ok() == Some(BigUint::from(72u32)), "f(2, 18)".into());
    let start = Instant::now();
    let r33 = brute_force_ramsey(3, 3, 6);
    let took = start.elapsed();
    check(&mut f, r33 == Some(6), format!("r(3,3) = {r33:?}"));
    check(&mut f, took < Duration::from_secs(10), format!("r(3,3) took {took:?}"));
    summarize(f, format!("l_chain(2) = (3, 6, 18), c2 = 18, f(1) = 1, f(2,18) = 72, r(3,3) = 6 in {took:.2?}"))
}

fn main() -> ExitCode {
    let criteria: Vec<(u32, &str, Duration, fn() -> Outcome)> = vec![
        (1, "paths", Duration::from_secs(60), paths),
        (2, "cycles", Duration::from_secs(120), cycles),
        (3, "complete bipartite", Duration::from_secs(120), bipartite),
        (4, "G_k construction", Duration::from_secs(600), gk_construction),
        (5, "ratio exhibit C7", Duration::from_secs(60), ratio),
        (6, "edge-addition anomaly", Duration::from_secs(60), anomaly),
        (7, "spider", Duration::from_secs(60), spider),
        (8, "G2 edge-addition anomaly", Duration::from_secs(60), g2_anomaly),
        (9, "universal pair", Duration::from_secs(60), universal_pair),
        (10, "property suite", Duration::from_secs(1800), property_suite),
        (11, "oracle equivalence", Duration::from_secs(600), oracle_equivalence),
        (12, "strategy simulation", Duration::from_secs(300), strategy_simulation),
        (13, "bounds arithmetic", Duration::from_secs(60), bounds_arithmetic),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let ok = out.ok && took <= limit;
        if !ok {
            failed += 1;
        }
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} [{verdict}] {name}: {} ({took:.2?}, limit {limit:?})", out.detail);
    }
    println!(
        "criterion 14 [NOTE] f(k) for k >= 4 and the open existence questions are not experiments; \
         they are covered by the property suites and by hunt, which reports computed values only"
    );
    if failed == 0 {
        println!("acceptance: all 13 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
