//! Exact solvers for the eviction game and the eternal domination game.
//!
//! A configuration is the set of occupied vertices (one guard per vertex).
//! In the eviction game the attacker names an occupied vertex `v`; its guard
//! must move to an unoccupied neighbour if one exists, and otherwise stays
//! put. In the eternal domination game the attacker names an unoccupied
//! vertex `w` and some guard on a neighbour of `w` must move onto it. The
//! defender loses as soon as the configuration stops dominating.
//!
//! The safe set for k guards is the greatest set of dominating k-configurations
//! closed under defender replies. An attack on a surrounded guard maps a
//! configuration to itself: when `N[v] ⊆ D` every vertex other than `v` is
//! still dominated by `D ∖ {v}`, and `v` is dominated by its neighbours unless
//! it is isolated, so the one-turn gap never changes the outcome.

mod certificate;
mod family;
pub mod reference;
mod simulate;
mod solver;
mod space;

use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::invariants::{clique_cover_number, domination_number, independence_number};

pub use certificate::{attacker_certificate, AttackCertificate, CertificateEntry, CertificateNode};
pub use family::{
    extract_eternal_family, extract_eviction_family, verify_eternal_family, verify_eviction_family, FamilyViolation,
    StrategyFamily,
};
pub use simulate::{
    simulate, Attacker, CertificateAttacker, GreedyResponder, RandomAttacker, Responder, SequenceAttacker, Step,
    StepOutcome, Transcript,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rules {
    Eviction,
    EternalDomination,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("guard count {k} must lie in 1..={n}")]
    InvalidGuardCount { k: usize, n: usize },
    #[error("{states} configurations exceed the solver cap of {cap}")]
    StateSpaceTooLarge { states: u64, cap: u64 },
    #[error("time limit reached")]
    Timeout,
    #[error("no eternal dominating family with {k} guards")]
    NoStrategy { k: usize },
    #[error("the defender wins with {k} guards; no attacker certificate exists")]
    DefenderWins { k: usize },
    #[error("bound violated: {0}")]
    BoundViolation(String),
}

/// Resource limits for one solver call.
#[derive(Clone, Debug)]
pub struct Limits {
    pub deadline: Option<Instant>,
    /// Largest number of k-configurations the solver will index.
    pub max_states: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { deadline: None, max_states: 1 << 24 }
    }
}

/// The configurations from which the defender survives forever.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SafeSet {
    pub rules: Rules,
    pub k: usize,
    /// Sorted ascending by bit pattern.
    pub members: Vec<VertexSet>,
}

impl SafeSet {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, d: VertexSet) -> bool {
        self.members.binary_search(&d).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.members.iter().copied()
    }
}

/// Status of one k-configuration after solving.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Status {
    NotDominating,
    Safe,
    /// The attacker wins by playing `attack`; every reply leads to a
    /// position of strictly smaller `depth` (0 = not dominating).
    Losing { attack: usize, depth: u32 },
}

/// Full solution of one (graph, k, rules) game.
pub struct GameAnalysis {
    rules: Rules,
    k: usize,
    fp: solver::FixedPoint,
}

impl GameAnalysis {
    pub fn new(g: &Graph, k: usize, rules: Rules, limits: &Limits) -> Result<GameAnalysis, GameError> {
        let fp = solver::solve(g, k, rules, limits)?;
        if rules == Rules::Eviction {
            for d in fp.safe_members() {
                for v in d {
                    if g.closed_neighborhood(v).is_subset(d) && !surrounded_gap_is_harmless(g, d, v) {
                        return Err(GameError::BoundViolation(format!(
                            "{} stops dominating while the surrounded guard on {v} is out of play",
                            d
                        )));
                    }
                }
            }
        }
        Ok(GameAnalysis { rules, k, fp })
    }

    pub fn rules(&self) -> Rules {
        self.rules
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn safe_set(&self) -> SafeSet {
        SafeSet { rules: self.rules, k: self.k, members: self.fp.safe_members() }
    }

    pub fn defender_wins(&self) -> bool {
        self.fp.alive.iter().any(|&a| a)
    }

    /// Status of `d`; `None` if `d` does not have exactly k members in range.
    pub fn status(&self, d: VertexSet) -> Option<Status> {
        if d.len() != self.k || !d.is_subset(VertexSet::full(self.fp.space.n())) {
            return None;
        }
        let i = self.fp.space.rank(d);
        Some(if !self.fp.dominating[i] {
            Status::NotDominating
        } else if self.fp.alive[i] {
            Status::Safe
        } else {
            Status::Losing { attack: self.fp.killer_of(i).expect("killed configs record an attack"), depth: self.fp.depth[i] }
        })
    }

    pub(crate) fn fixed_point(&self) -> &solver::FixedPoint {
        &self.fp
    }
}

/// With `N[v] ⊆ D`, the guards `D ∖ {v}` still dominate every vertex other
/// than `v`, and dominate `v` too unless it is isolated.
pub fn surrounded_gap_is_harmless(g: &Graph, d: VertexSet, v: usize) -> bool {
    let rest = d.without(v);
    let covered = rest.iter().fold(VertexSet::EMPTY, |acc, u| acc | g.closed_neighborhood(u));
    let need = if g.degree(v) == 0 { g.vertices().without(v) } else { g.vertices() };
    need.is_subset(covered)
}

/// Every dominating set of exactly `k` vertices, in increasing bit order.
pub fn enumerate_dominating_sets(g: &Graph, k: usize) -> Vec<VertexSet> {
    if k == 0 || k > g.n() {
        return Vec::new();
    }
    space::ConfigSpace::new(g.n(), k).iter().filter(|&d| g.is_dominating(d)).collect()
}

pub fn safe_set(g: &Graph, k: usize, rules: Rules, limits: &Limits) -> Result<SafeSet, GameError> {
    Ok(GameAnalysis::new(g, k, rules, limits)?.safe_set())
}

pub fn eviction_safe_set(g: &Graph, k: usize) -> Result<SafeSet, GameError> {
    safe_set(g, k, Rules::Eviction, &Limits::default())
}

pub fn eternal_domination_safe_set(g: &Graph, k: usize) -> Result<SafeSet, GameError> {
    safe_set(g, k, Rules::EternalDomination, &Limits::default())
}

/// e∞(G): the least k whose eviction safe set is nonempty. The search runs
/// upward from γ(G) and fails if it passes θ(G).
pub fn eviction_number_with(g: &Graph, limits: &Limits) -> Result<usize, GameError> {
    let gamma = domination_number(g).0;
    let theta = clique_cover_number(g).0;
    for k in gamma..=theta {
        if GameAnalysis::new(g, k, Rules::Eviction, limits)?.defender_wins() {
            return Ok(k);
        }
    }
    Err(GameError::BoundViolation(format!("no eviction strategy with theta = {theta} guards")))
}

pub fn eviction_number(g: &Graph) -> Result<usize, GameError> {
    eviction_number_with(g, &Limits::default())
}

/// γ∞(G), checked against α(G) ≤ γ∞(G) ≤ C(α(G)+1, 2).
pub fn eternal_domination_number_with(g: &Graph, limits: &Limits) -> Result<usize, GameError> {
    let gamma = domination_number(g).0;
    let theta = clique_cover_number(g).0;
    let alpha = independence_number(g).0;
    let upper = alpha * (alpha + 1) / 2;
    for k in gamma..=theta {
        if GameAnalysis::new(g, k, Rules::EternalDomination, limits)?.defender_wins() {
            if k < alpha || k > upper {
                return Err(GameError::BoundViolation(format!(
                    "eternal domination number {k} outside [alpha, C(alpha+1,2)] = [{alpha}, {upper}]"
                )));
            }
            return Ok(k);
        }
    }
    Err(GameError::BoundViolation(format!("no eternal domination strategy with theta = {theta} guards")))
}

pub fn eternal_domination_number(g: &Graph) -> Result<usize, GameError> {
    eternal_domination_number_with(g, &Limits::default())
}

/// Attack for a position the defender can hold: the occupied vertex (or
/// unoccupied, for eternal domination) minimising the number of replies
/// that stay safe; ties go to the lowest vertex.
pub fn heuristic_attack(g: &Graph, analysis: &GameAnalysis, d: VertexSet) -> Option<usize> {
    let rules = analysis.rules();
    solver::attacks(g, rules, d).iter().min_by_key(|&a| {
        if rules == Rules::Eviction && g.closed_neighborhood(a).is_subset(d) {
            return usize::MAX;
        }
        solver::replies(g, rules, d, a).filter(|&r| analysis.status(r) == Some(Status::Safe)).count()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn brute_dominating(g: &Graph, k: usize) -> Vec<VertexSet> {
        (0u64..1 << g.n()).map(VertexSet::from_bits).filter(|s| s.len() == k && g.is_dominating(*s)).collect()
    }

    #[test]
    fn dominating_sets_of_c7() {
        let c7 = gen("cycle:7");
        let three = enumerate_dominating_sets(&c7, 3);
        assert_eq!(three, brute_dominating(&c7, 3));
        // gaps between consecutive guards around the cycle sum to 7 and are
        // at most 3: (3,3,1) or (3,2,2) up to rotation, 7 placements each
        assert_eq!(three.len(), 14);
        assert!(enumerate_dominating_sets(&c7, 2).is_empty());
        assert_eq!(enumerate_dominating_sets(&gen("complete:5"), 1).len(), 5);
    }

    #[test]
    fn c7_safe_sets() {
        let c7 = gen("cycle:7");
        assert!(!eviction_safe_set(&c7, 4).unwrap().is_empty());
        assert!(eviction_safe_set(&c7, 3).unwrap().is_empty());
        assert_eq!(eviction_number(&c7).unwrap(), 4);
    }

    #[test]
    fn universal_pair_oscillates() {
        let g = gen("universal-pair:4");
        let safe = eviction_safe_set(&g, 1).unwrap();
        assert_eq!(safe.members, vec![VertexSet::singleton(0), VertexSet::singleton(1)]);
    }

    #[test]
    fn small_named_values() {
        assert_eq!(eviction_number(&gen("path:6")).unwrap(), 3);
        assert_eq!(eviction_number(&gen("cycle:5")).unwrap(), 2);
        assert_eq!(eviction_number(&gen("cycle:3")).unwrap(), 1);
        assert_eq!(eviction_number(&gen("bipartite:3,4")).unwrap(), 4);
        assert_eq!(eviction_number(&gen("gk:1")).unwrap(), 5);
        assert_eq!(eviction_number(&gen("path:1")).unwrap(), 1);
    }

    #[test]
    fn eternal_domination_values() {
        let c7 = gen("cycle:7");
        let e = eternal_domination_number(&c7).unwrap();
        assert!((3..=4).contains(&e));
        assert_eq!(eternal_domination_number(&gen("complete:6")).unwrap(), 1);
        // alpha = theta = 4 pins it down
        assert_eq!(eternal_domination_number(&gen("universal-pair:4")).unwrap(), 4);
    }

    #[test]
    fn guard_count_checked() {
        let g = gen("path:3");
        assert_eq!(eviction_safe_set(&g, 0), Err(GameError::InvalidGuardCount { k: 0, n: 3 }));
        assert_eq!(eviction_safe_set(&g, 4), Err(GameError::InvalidGuardCount { k: 4, n: 3 }));
        let tiny = Limits { deadline: None, max_states: 2 };
        assert!(matches!(safe_set(&g, 1, Rules::Eviction, &tiny), Err(GameError::StateSpaceTooLarge { .. })));
    }

    #[test]
    fn expired_deadline_times_out() {
        let g = gen("gk:2");
        let limits = Limits { deadline: Some(Instant::now()), ..Limits::default() };
        assert_eq!(eviction_number_with(&g, &limits), Err(GameError::Timeout));
    }

    #[test]
    fn status_reports_losing_attacks() {
        let c7 = gen("cycle:7");
        let a = GameAnalysis::new(&c7, 3, Rules::Eviction, &Limits::default()).unwrap();
        let d: VertexSet = [0, 2, 4].into_iter().collect();
        assert!(matches!(a.status(d), Some(Status::Losing { .. })));
        assert_eq!(a.status([0, 1, 2].into_iter().collect()), Some(Status::NotDominating));
        assert_eq!(a.status(VertexSet::singleton(0)), None);
    }
}
