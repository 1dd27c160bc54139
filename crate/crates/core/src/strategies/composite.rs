use serde::{Deserialize, Serialize};

use crate::game::{Responder, Rules};
use crate::graph::{Graph, VertexSet};

use super::{find_ramsey_array, matching_defend, matching_init, peel_with, ramsey_defend, MatchingMove};
use super::{MatchingState, PeelingResult, RamseyArray};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Region {
    Array,
    Matching,
    Outside,
}

/// Something the combined defence could not handle within its own rules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Finding {
    /// A matching-region guard whose unoccupied neighbours all lie off the matching.
    Escape { from: usize, options: VertexSet },
    /// An attack the strategy has no rule for, with the reason.
    Unhandled { attack: usize, region: Region, reason: String },
}

/// The array strategy on the residual graph combined with matching
/// maintenance on the peeled vertices and their partners.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CompositeDefense {
    pub array: RamseyArray,
    /// Vertices of the subgraph the array lives in.
    pub array_host: VertexSet,
    pub matching: Option<MatchingState>,
    pub peeling: Option<PeelingResult>,
    pub initial: VertexSet,
    pub findings: Vec<Finding>,
}

impl CompositeDefense {
    pub fn region_of(&self, v: usize) -> Region {
        if self.array_host.contains(v) {
            Region::Array
        } else if self.matching.as_ref().is_some_and(|m| m.region.contains(v)) {
            Region::Matching
        } else {
            Region::Outside
        }
    }

    pub fn guards(&self) -> usize {
        self.initial.len()
    }

    fn unhandled(&mut self, attack: usize, region: Region, reason: String) -> Option<VertexSet> {
        self.findings.push(Finding::Unhandled { attack, region, reason });
        None
    }
}

impl Responder for CompositeDefense {
    fn respond(&mut self, g: &Graph, rules: Rules, d: VertexSet, attack: usize) -> Option<VertexSet> {
        let region = self.region_of(attack);
        if rules != Rules::Eviction {
            return self.unhandled(attack, region, "only eviction attacks are handled".into());
        }
        match region {
            Region::Array => {
                let support = self.array.support();
                match ramsey_defend(&self.array, d & support, attack) {
                    Ok(cells) => Some((d - support) | cells),
                    Err(e) => self.unhandled(attack, region, e.to_string()),
                }
            }
            Region::Matching => {
                let state = self.matching.as_ref().expect("matching region implies a matching state");
                let outside = d - state.guarded;
                match matching_defend(state, g, attack, outside) {
                    Ok((_, MatchingMove::Escape { from, options })) => {
                        self.findings.push(Finding::Escape { from, options });
                        None
                    }
                    Ok((next, _)) => {
                        let after = outside | next.guarded;
                        self.matching = Some(next);
                        Some(after)
                    }
                    Err(e) => self.unhandled(attack, region, e.to_string()),
                }
            }
            Region::Outside => self.unhandled(attack, region, "vertex lies outside both regions".into()),
        }
    }
}

/// Combined defence with the default peeling threshold.
pub fn composite_defense(g: &Graph) -> Option<CompositeDefense> {
    composite_defense_with(g, |l| l + 1)
}

/// If the graph has a Ramsey array, the array alone. Otherwise peel, match
/// the peeled set `S`, and look for an array in what is left after removing
/// `S` and its partners. `None` when any step fails.
pub fn composite_defense_with(g: &Graph, threshold: impl Fn(usize) -> usize) -> Option<CompositeDefense> {
    if let Some(array) = find_ramsey_array(g) {
        let initial = array.initial_guards();
        return Some(CompositeDefense {
            array,
            array_host: g.vertices(),
            matching: None,
            peeling: None,
            initial,
            findings: Vec::new(),
        });
    }
    let peeling = peel_with(g, threshold).ok()?;
    peeling.achieved_level?;
    let state = matching_init(g, peeling.removed()).ok()?;
    let host = g.vertices() - state.region;
    if host.is_empty() {
        return None;
    }
    let (sub, labels) = g.induced_subgraph(host).ok()?;
    let array = find_ramsey_array(&sub)?.relabel(&labels);
    let initial = array.initial_guards() | state.guarded;
    if !g.is_dominating(initial) {
        return None;
    }
    Some(CompositeDefense {
        array,
        array_host: host,
        matching: Some(state),
        peeling: Some(peeling),
        initial,
        findings: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{simulate, RandomAttacker};
    use crate::graph::FamilySpec;

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn pendant_fixture() -> Graph {
        let mut edges = gen("copies(2,complete:4)").edges();
        edges.push((0, 8));
        Graph::from_edges(9, &edges).unwrap()
    }

    #[test]
    fn fixture_splits_into_both_regions() {
        let g = pendant_fixture();
        let mut def = composite_defense(&g).unwrap();
        assert_eq!(def.array.k, 2);
        let m = def.matching.clone().unwrap();
        assert_eq!(m.region, [0, 8].into_iter().collect());
        assert_eq!(def.guards(), 5);
        def.array.validate(&g, def.array_host).unwrap();
        let start = def.initial;
        let t = simulate(&g, Rules::Eviction, &mut def, start, &mut RandomAttacker::new(2), 10_000);
        assert_eq!(t.violation, None);
        assert!(def.findings.is_empty());
        def.matching.unwrap().check(&g).unwrap();
    }

    #[test]
    fn array_alone_when_present() {
        let g = gen("copies(2,complete:3)");
        let def = composite_defense(&g).unwrap();
        assert!(def.matching.is_none() && def.peeling.is_none());
        assert_eq!(def.guards(), 4);
    }

    #[test]
    fn absent_without_array_or_peel() {
        assert!(composite_defense(&gen("path:1")).is_none());
        assert!(composite_defense(&gen("cycle:7")).is_none());
    }

    #[test]
    fn outside_attacks_are_findings() {
        let g = pendant_fixture();
        let mut def = composite_defense(&g).unwrap();
        let d = def.initial;
        assert_eq!(def.respond(&g, Rules::Eviction, d, 40), None);
        assert_eq!(def.findings.len(), 1);
    }
}
