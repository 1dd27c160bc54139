use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::invariants::{constrained_matching, Matching};

use super::StrategyError;

/// Guards on a region kept as one guard per matching edge plus one guard on
/// every region vertex the matching leaves uncovered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingState {
    pub matching: Matching,
    /// The defended vertices: the target set plus every matched partner.
    pub region: VertexSet,
    pub guarded: VertexSet,
    pub uncovered_guards: VertexSet,
}

/// What a defended attack did.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MatchingMove {
    /// A matched guard crossed its edge.
    Slid { from: usize, to: usize },
    /// An unmatched guard with no unoccupied neighbour stays put.
    Stayed { at: usize },
    /// An unmatched guard moved onto a matched vertex whose partner was guarded;
    /// the edge to the partner was replaced by the edge just used.
    Swapped { from: usize, to: usize, released: usize },
    /// An unmatched guard's only unoccupied neighbours are unmatched; the state
    /// is left unchanged and the caller decides what to do.
    Escape { from: usize, options: VertexSet },
}

impl MatchingState {
    pub fn guards(&self) -> usize {
        self.guarded.len()
    }

    /// Checks the invariant: every edge of a valid matching inside the region
    /// has exactly one guarded end, and every unmatched region vertex is guarded.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        if !self.matching.is_valid_in(g) {
            return Err("not a matching of the graph".into());
        }
        let covered = self.matching.covered();
        if !covered.is_subset(self.region) || !self.guarded.is_subset(self.region) {
            return Err("matching or guards leave the region".into());
        }
        for &(u, v) in self.matching.edges() {
            if self.guarded.contains(u) == self.guarded.contains(v) {
                return Err(format!("edge {u}-{v} does not carry exactly one guard"));
            }
        }
        let uncovered = self.region - covered;
        if !uncovered.is_subset(self.guarded) || self.uncovered_guards != uncovered {
            return Err("an unmatched region vertex is unguarded".into());
        }
        if self.guarded.len() != self.matching.len() + uncovered.len() {
            return Err("guard count does not match the invariant".into());
        }
        Ok(())
    }
}

/// Starting placement on the region spanned by `s` and a matching that
/// covers as much of `s` as possible.
pub fn matching_init(g: &Graph, s: VertexSet) -> Result<MatchingState, StrategyError> {
    if !s.is_subset(g.vertices()) {
        return Err(StrategyError::Precondition(format!("{s} is not a vertex set of the graph")));
    }
    let matching = constrained_matching(g, s)?;
    let covered = matching.covered();
    let region = s | covered;
    let mut guarded = region - covered;
    for &(u, v) in matching.edges() {
        // guard the end in s when only one end is; otherwise the lower end
        guarded.insert(if !s.contains(u) && s.contains(v) { v } else { u });
    }
    Ok(MatchingState { matching, region, guarded, uncovered_guards: region - covered })
}

/// Responds to an attack on a guard of the state. `occupied_elsewhere` lists
/// guards outside this state that block moves.
pub fn matching_defend(
    state: &MatchingState,
    g: &Graph,
    attack: usize,
    occupied_elsewhere: VertexSet,
) -> Result<(MatchingState, MatchingMove), StrategyError> {
    if !state.guarded.contains(attack) {
        return Err(StrategyError::NotGuarded(attack));
    }
    let occupied = state.guarded | occupied_elsewhere;
    let mut next = state.clone();
    if let Some(y) = state.matching.partner(attack) {
        if occupied.contains(y) {
            return Err(StrategyError::Precondition(format!("partner {y} of {attack} is occupied")));
        }
        next.guarded = next.guarded.without(attack).with(y);
        return Ok((next, MatchingMove::Slid { from: attack, to: y }));
    }
    let free = g.neighbors(attack) - occupied;
    if free.is_empty() {
        return Ok((next, MatchingMove::Stayed { at: attack }));
    }
    let covered = state.matching.covered();
    let Some(x) = (free & covered).first() else {
        return Ok((next, MatchingMove::Escape { from: attack, options: free }));
    };
    let y = state.matching.partner(x).expect("covered vertices have partners");
    next.matching.swap_edge((x, y), (attack, x));
    next.guarded = next.guarded.without(attack).with(x);
    next.uncovered_guards = next.uncovered_guards.without(attack).with(y);
    Ok((next, MatchingMove::Swapped { from: attack, to: x, released: y }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn single_edge() {
        let g = gen("path:2");
        let st = matching_init(&g, g.vertices()).unwrap();
        assert_eq!(st.guards(), 1);
        let (next, mv) = matching_defend(&st, &g, 0, VertexSet::EMPTY).unwrap();
        assert_eq!(mv, MatchingMove::Slid { from: 0, to: 1 });
        assert_eq!(next.matching, st.matching);
        next.check(&g).unwrap();
    }

    #[test]
    fn star_with_three_leaves() {
        let g = gen("star:3");
        let st = matching_init(&g, g.vertices()).unwrap();
        assert_eq!(st.matching.len(), 1);
        assert_eq!(st.guards(), 3);
        st.check(&g).unwrap();
    }

    #[test]
    fn case_two_on_a_path() {
        // z - x - y with M = {xy}: z = 0, x = 1, y = 2
        let g = gen("path:3");
        let st = MatchingState {
            matching: Matching::new([(1, 2)]).unwrap(),
            region: g.vertices(),
            guarded: [0, 2].into_iter().collect(),
            uncovered_guards: VertexSet::singleton(0),
        };
        st.check(&g).unwrap();
        let (next, mv) = matching_defend(&st, &g, 0, VertexSet::EMPTY).unwrap();
        assert_eq!(mv, MatchingMove::Swapped { from: 0, to: 1, released: 2 });
        assert_eq!(next.matching, Matching::new([(0, 1)]).unwrap());
        assert_eq!(next.guarded, [1, 2].into_iter().collect());
        next.check(&g).unwrap();
    }

    #[test]
    fn unguarded_attack_rejected() {
        let g = gen("path:2");
        let st = matching_init(&g, g.vertices()).unwrap();
        assert_eq!(matching_defend(&st, &g, 1, VertexSet::EMPTY).unwrap_err(), StrategyError::NotGuarded(1));
    }

    #[test]
    fn invariant_survives_random_play() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let n = rng.gen_range(2..=10);
            let g = Graph::random(n, 0.35, &mut rng).unwrap();
            let s = VertexSet::from_bits(rng.gen::<u64>()) & g.vertices();
            let mut st = matching_init(&g, s).unwrap();
            st.check(&g).unwrap();
            assert!(st.guards() <= st.region.len());
            for _ in 0..300 {
                let a = st.guarded.iter().nth(rng.gen_range(0..st.guards().max(1))).unwrap_or(0);
                if st.guarded.is_empty() {
                    break;
                }
                let (next, mv) = matching_defend(&st, &g, a, VertexSet::EMPTY).unwrap();
                assert!(!matches!(mv, MatchingMove::Escape { .. }));
                next.check(&g).unwrap();
                st = next;
            }
        }
    }
}
