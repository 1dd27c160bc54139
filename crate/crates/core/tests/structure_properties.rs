use num_bigint::BigUint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use evictlab::bounds::{f_bound, l_chain};
use evictlab::invariants::{
    disjoint_max_independent_sets, independence_number, is_cograph, max_disjoint_max_independent_sets_within,
    ParamReport,
};
use evictlab::strategies::{
    find_ramsey_array, matching_defend, matching_init, peel, ramsey_defend, ramsey_domination_witness, MatchingMove,
};
use evictlab::{FamilySpec, Graph, VertexSet};

fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| {
        Graph::random(n, p, &mut ChaCha8Rng::seed_from_u64(seed)).expect("small graph")
    })
}

fn leaf_spec() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (1usize..=8).prop_map(FamilySpec::Path),
        (3usize..=8).prop_map(FamilySpec::Cycle),
        (1usize..=6).prop_map(FamilySpec::Complete),
        (1usize..=6).prop_map(FamilySpec::Empty),
        (1usize..=4, 1usize..=4).prop_map(|(m, n)| FamilySpec::CompleteBipartite(m, n)),
        (1usize..=5).prop_map(FamilySpec::Star),
        (1usize..=4).prop_map(FamilySpec::Spider),
        (1usize..=2).prop_map(FamilySpec::Gk),
        (1usize..=5).prop_map(FamilySpec::UniversalPair),
        (1usize..=4).prop_map(FamilySpec::Anomaly),
        (1usize..=4).prop_map(FamilySpec::AnomalyBridged),
        Just(FamilySpec::G2),
        Just(FamilySpec::G2Prime),
    ]
}

fn spec() -> impl Strategy<Value = FamilySpec> {
    leaf_spec().prop_recursive(2, 6, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| FamilySpec::Join(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| FamilySpec::Union(Box::new(a), Box::new(b))),
            (1usize..=3, inner).prop_map(|(k, a)| FamilySpec::Copies(k, Box::new(a))),
        ]
    })
}

fn brute_clique_number(g: &Graph) -> usize {
    (0u64..1 << g.n()).map(VertexSet::from_bits).filter(|s| g.is_clique(*s)).map(|s| s.len()).max().unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn generated_graphs_are_simple(s in spec()) {
        prop_assume!(s.order() <= 64);
        let g = s.generate().unwrap();
        prop_assert_eq!(g.n(), s.order());
        for u in 0..g.n() {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..g.n() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        prop_assert_eq!(s.to_string().parse::<FamilySpec>().unwrap(), s);
    }

    #[test]
    fn parameters_carry_valid_witnesses(g in random_graph(10)) {
        let r = ParamReport::compute(&g);
        prop_assert!(r.verify(&g).is_ok(), "{:?}", r.verify(&g));
    }

    #[test]
    fn complement_alpha_is_clique_number(g in random_graph(9)) {
        prop_assert_eq!(independence_number(&g.complement()).0, brute_clique_number(&g));
    }

    #[test]
    fn disjoint_maximum_independent_sets(g in random_graph(9)) {
        let alpha = independence_number(&g).0;
        let best = max_disjoint_max_independent_sets_within(&g, g.vertices());
        prop_assert!(!best.is_empty());
        let mut used = VertexSet::EMPTY;
        for s in &best {
            prop_assert!(g.is_independent(*s) && s.len() == alpha);
            prop_assert!(s.is_disjoint(used));
            used = used | *s;
        }
        prop_assert!(disjoint_max_independent_sets(&g, best.len()).is_some());
        prop_assert!(disjoint_max_independent_sets(&g, best.len() + 1).is_none());
    }

    #[test]
    fn cographs_are_closed_under_join_and_union(a in random_graph(4), b in random_graph(4)) {
        let both = is_cograph(&a) && is_cograph(&b);
        if both {
            prop_assert!(is_cograph(&a.join(&b).unwrap()));
            prop_assert!(is_cograph(&a.disjoint_union(&b).unwrap()));
            prop_assert!(is_cograph(&a.complement()));
        }
    }

    #[test]
    fn matching_defence_keeps_its_invariant(g in random_graph(12), bits: u64, seed: u64) {
        let s = VertexSet::from_bits(bits) & g.vertices();
        let mut st = matching_init(&g, s).unwrap();
        prop_assert!(st.check(&g).is_ok());
        prop_assert!(s.is_subset(st.region));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..if st.guarded.is_empty() { 0 } else { 200 } {
            let a = st.guarded.iter().nth(rng.gen_range(0..st.guards())).unwrap();
            let (next, mv) = matching_defend(&st, &g, a, VertexSet::EMPTY).unwrap();
            match mv {
                MatchingMove::Escape { options, .. } => {
                    prop_assert_eq!(&next, &st);
                    prop_assert!(!options.is_empty());
                }
                _ => prop_assert_eq!(next.guards(), st.guards()),
            }
            prop_assert!(next.check(&g).is_ok(), "{:?}", next.check(&g));
            st = next;
        }
    }

    #[test]
    fn peeling_respects_the_cascade(g in random_graph(10)) {
        if let Ok(r) = peel(&g) {
            prop_assert!(r.check_cascade().is_ok(), "{:?}", r.check_cascade());
            let mut within = g.vertices();
            for (i, step) in r.steps.iter().enumerate() {
                within = within - step.removed;
                prop_assert_eq!(step.alpha_after, r.alpha - i - 1);
            }
            prop_assert_eq!(within, r.residual);
        }
    }
}

/// Every step on `kK_{k+1}` (and on 2K3 with a universal vertex) keeps k
/// guards per column, moves into an empty cell of the same column, and
/// leaves a fully guarded row.
#[test]
fn array_defence_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for spec in ["copies(2,complete:3)", "copies(3,complete:4)", "copies(4,complete:5)", "join(complete:1,copies(2,complete:3))"] {
        let g: Graph = spec.parse::<FamilySpec>().unwrap().generate().unwrap();
        let arr = find_ramsey_array(&g).unwrap_or_else(|| panic!("{spec} has an array"));
        arr.validate(&g, g.vertices()).unwrap();
        let k = arr.k;
        let mut c = arr.initial_guards();
        for _ in 0..2_000 {
            let a = c.iter().nth(rng.gen_range(0..c.len())).unwrap();
            let next = ramsey_defend(&arr, c, a).unwrap();
            let moved: Vec<usize> = (next - c).iter().collect();
            assert_eq!(moved.len(), 1, "{spec}");
            assert_eq!(arr.column_of(moved[0]), arr.column_of(a));
            assert!(!next.contains(a));
            for j in 0..k {
                assert_eq!((arr.column(j) & next).len(), k);
            }
            let row = ramsey_domination_witness(&arr, next).unwrap();
            assert!(arr.row(row).is_subset(next));
            assert!(g.is_dominating(next));
            c = next;
        }
    }
}

#[test]
fn chains_grow_and_f_dominates_small_alpha() {
    for k in 1..=4 {
        let chain = l_chain(k).unwrap();
        assert_eq!(chain.len(), k + 1);
        assert!(chain.iter().all(|i| i.lo <= i.hi));
        assert!(chain.windows(2).all(|w| w[0].lo <= w[1].lo && w[0].hi <= w[1].hi));
    }
    // e ≤ 1, 2, 5 for α = 1, 2, 3 sits below f evaluated at any c_k ≥ 1
    for (k, cap) in [(1usize, 1u32), (2, 2), (3, 5)] {
        assert!(f_bound(k, &BigUint::from(1u32)).unwrap() >= BigUint::from(cap));
    }
}
