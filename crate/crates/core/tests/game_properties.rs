use proptest::prelude::*;

use evictlab::game::{
    attacker_certificate, eviction_number, extract_eternal_family, extract_eviction_family, reference, safe_set,
    surrounded_gap_is_harmless, verify_eternal_family, verify_eviction_family, GameAnalysis, GameError, Limits, Rules,
};
use evictlab::invariants::{clique_cover_number, domination_number};
use evictlab::{Graph, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn rules_strategy() -> impl Strategy<Value = Rules> {
    prop_oneof![Just(Rules::Eviction), Just(Rules::EternalDomination)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn worklist_matches_naive_fixed_point(g in graph_strategy(8), rules in rules_strategy(), k in 1usize..=8) {
        prop_assume!(k <= g.n());
        let fast = safe_set(&g, k, rules, &Limits::default()).unwrap();
        prop_assert_eq!(fast.members, reference::naive_safe_set(&g, k, rules));
    }

    #[test]
    fn safe_sets_grow_with_guards(g in graph_strategy(8), rules in rules_strategy()) {
        let mut seen = false;
        for k in 1..=g.n() {
            let wins = GameAnalysis::new(&g, k, rules, &Limits::default()).unwrap().defender_wins();
            prop_assert!(!seen || wins, "k = {}", k);
            seen |= wins;
        }
        prop_assert!(seen);
    }

    #[test]
    fn eviction_number_between_gamma_and_theta(g in graph_strategy(8)) {
        let e = eviction_number(&g).unwrap();
        prop_assert!(domination_number(&g).0 <= e);
        prop_assert!(e <= clique_cover_number(&g).0);
    }

    #[test]
    fn surrounded_guards_can_sit_out(g in graph_strategy(8), k in 1usize..=8) {
        prop_assume!(k <= g.n());
        for d in safe_set(&g, k, Rules::Eviction, &Limits::default()).unwrap().iter() {
            for v in d {
                if g.closed_neighborhood(v).is_subset(d) {
                    prop_assert!(surrounded_gap_is_harmless(&g, d, v));
                }
            }
        }
    }

    #[test]
    fn extracted_families_verify(g in graph_strategy(7)) {
        let e = eviction_number(&g).unwrap();
        let fam = extract_eviction_family(&g, e).unwrap();
        prop_assert!(verify_eviction_family(&g, &fam).is_ok());
        let ed = evictlab::game::eternal_domination_number(&g).unwrap();
        let fam = extract_eternal_family(&g, ed).unwrap();
        prop_assert!(verify_eternal_family(&g, &fam).is_ok());
    }

    #[test]
    fn certificates_below_the_eviction_number(g in graph_strategy(7)) {
        let e = eviction_number(&g).unwrap();
        for k in 1..e {
            match attacker_certificate(&g, k, Rules::Eviction, &Limits::default()) {
                Ok(cert) => prop_assert!(cert.verify(&g).is_ok()),
                Err(err) => prop_assert!(false, "k = {}: {}", k, err),
            }
        }
        prop_assert_eq!(
            attacker_certificate(&g, e, Rules::Eviction, &Limits::default()).unwrap_err(),
            GameError::DefenderWins { k: e }
        );
    }
}

#[test]
fn isolated_vertex_keeps_one_guard() {
    let k1 = Graph::empty(1).unwrap();
    assert_eq!(eviction_number(&k1).unwrap(), 1);
    assert!(surrounded_gap_is_harmless(&k1, VertexSet::singleton(0), 0));
    let two = Graph::empty(2).unwrap();
    assert_eq!(eviction_number(&two).unwrap(), 2);
}
