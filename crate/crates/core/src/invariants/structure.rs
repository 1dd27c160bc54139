use crate::graph::Graph;

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().into_iter().all(|(u, v)| g.neighbors(u).is_disjoint(g.neighbors(v)))
}

/// An induced path `a-b-c-d`, if one exists.
pub fn induced_p4(g: &Graph) -> Option<[usize; 4]> {
    for (b, c) in g.edges() {
        for (b, c) in [(b, c), (c, b)] {
            let ends_a = g.neighbors(b) - g.closed_neighborhood(c);
            let ends_d = g.neighbors(c) - g.closed_neighborhood(b);
            for a in ends_a {
                if let Some(d) = (ends_d - g.closed_neighborhood(a)).first() {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Cographs are exactly the graphs without an induced P4.
pub fn is_cograph(g: &Graph) -> bool {
    induced_p4(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_code, non_isomorphic_graphs, FamilySpec, VertexSet};
    use std::collections::HashSet;

    #[test]
    fn named_values() {
        let c7 = FamilySpec::Cycle(7).generate().unwrap();
        assert!(is_triangle_free(&c7));
        assert!(!is_triangle_free(&FamilySpec::Complete(3).generate().unwrap()));
        assert!(!is_cograph(&FamilySpec::Path(4).generate().unwrap()));
        assert!(is_cograph(&FamilySpec::UniversalPair(4).generate().unwrap()));
        assert_eq!(induced_p4(&FamilySpec::Path(4).generate().unwrap()), Some([0, 1, 2, 3]));
    }

    /// Closure of {K1} under disjoint union and join, up to isomorphism.
    fn cographs_up_to(n: usize) -> Vec<HashSet<crate::graph::CanonicalCode>> {
        let mut by_order: Vec<Vec<Graph>> = vec![Vec::new(); n + 1];
        let mut codes: Vec<HashSet<_>> = vec![HashSet::new(); n + 1];
        let k1 = Graph::empty(1).unwrap();
        codes[1].insert(canonical_code(&k1));
        by_order[1].push(k1);
        for m in 2..=n {
            for a in 1..=m / 2 {
                let b = m - a;
                let mut made = Vec::new();
                for ga in &by_order[a] {
                    for gb in &by_order[b] {
                        made.push(ga.disjoint_union(gb).unwrap());
                        made.push(ga.join(gb).unwrap());
                    }
                }
                for g in made {
                    if codes[m].insert(canonical_code(&g)) {
                        by_order[m].push(g);
                    }
                }
            }
        }
        codes
    }

    /// Recursive characterisation: K1, or a disconnected graph / graph with
    /// disconnected complement whose parts are all cographs.
    fn recursive_cograph(g: &Graph) -> bool {
        if g.n() == 1 {
            return true;
        }
        let split = |h: &Graph| -> Option<Vec<VertexSet>> {
            let comps = h.components();
            (comps.len() > 1).then_some(comps)
        };
        let parts = split(g).or_else(|| split(&g.complement()));
        match parts {
            None => false,
            Some(parts) => parts.into_iter().all(|p| recursive_cograph(&g.induced_subgraph(p).unwrap().0)),
        }
    }

    #[test]
    fn agrees_with_construction_closure() {
        let closure = cographs_up_to(6);
        for n in 1..=6 {
            for g in non_isomorphic_graphs(n) {
                let built = closure[n].contains(&canonical_code(&g));
                assert_eq!(is_cograph(&g), built, "{g:?}");
                assert_eq!(recursive_cograph(&g), built);
            }
        }
    }
}
