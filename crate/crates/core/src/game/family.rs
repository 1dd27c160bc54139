use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

use super::{solver, GameAnalysis, GameError, Limits, Rules};

/// A closed family of k-configurations together with a chosen reply for
/// every (configuration, attack) pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "FamilyJson", try_from = "FamilyJson")]
pub struct StrategyFamily {
    pub rules: Rules,
    pub k: usize,
    pub family: Vec<VertexSet>,
    pub moves: BTreeMap<(VertexSet, usize), VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    rules: Rules,
    k: usize,
    family: Vec<VertexSet>,
    moves: Vec<(VertexSet, usize, VertexSet)>,
}

impl From<StrategyFamily> for FamilyJson {
    fn from(f: StrategyFamily) -> Self {
        FamilyJson {
            rules: f.rules,
            k: f.k,
            family: f.family,
            moves: f.moves.into_iter().map(|((d, a), r)| (d, a, r)).collect(),
        }
    }
}

impl TryFrom<FamilyJson> for StrategyFamily {
    type Error = String;

    fn try_from(j: FamilyJson) -> Result<Self, String> {
        let mut moves = BTreeMap::new();
        for (d, a, r) in j.moves {
            if moves.insert((d, a), r).is_some() {
                return Err(format!("duplicate move for {d} attacked at {a}"));
            }
        }
        Ok(StrategyFamily { rules: j.rules, k: j.k, family: j.family, moves })
    }
}

impl StrategyFamily {
    pub fn contains(&self, d: VertexSet) -> bool {
        self.family.binary_search(&d).is_ok()
    }

    pub fn reply(&self, d: VertexSet, attack: usize) -> Option<VertexSet> {
        self.moves.get(&(d, attack)).copied()
    }
}

/// First way in which a claimed family breaks the rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyViolation {
    Empty,
    WrongSize { config: VertexSet, k: usize },
    NotDominating { config: VertexSet },
    /// No reply to this attack stays inside the family.
    NoReply { config: VertexSet, attack: usize },
    /// The recorded reply is not a legal move or leaves the family.
    BadMove { config: VertexSet, attack: usize, reply: VertexSet },
    MissingMove { config: VertexSet, attack: usize },
}

impl fmt::Display for FamilyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyViolation::Empty => write!(f, "family is empty"),
            FamilyViolation::WrongSize { config, k } => write!(f, "{config} does not have {k} guards"),
            FamilyViolation::NotDominating { config } => write!(f, "{config} is not dominating"),
            FamilyViolation::NoReply { config, attack } => write!(f, "{config} has no reply to an attack on {attack}"),
            FamilyViolation::BadMove { config, attack, reply } => {
                write!(f, "reply {reply} to an attack on {attack} in {config} is illegal or leaves the family")
            }
            FamilyViolation::MissingMove { config, attack } => {
                write!(f, "no move recorded for an attack on {attack} in {config}")
            }
        }
    }
}

impl std::error::Error for FamilyViolation {}

fn extract(g: &Graph, k: usize, rules: Rules, limits: &Limits) -> Result<StrategyFamily, GameError> {
    let analysis = GameAnalysis::new(g, k, rules, limits)?;
    let safe = analysis.safe_set();
    if safe.is_empty() {
        return Err(GameError::NoStrategy { k });
    }
    let mut moves = BTreeMap::new();
    for d in safe.iter() {
        for a in solver::attacks(g, rules, d) {
            let reply = if rules == Rules::Eviction && g.closed_neighborhood(a).is_subset(d) {
                d
            } else {
                // replies come out in increasing order of the moving guard's
                // destination (eviction) or origin (eternal domination)
                solver::replies(g, rules, d, a).find(|&r| safe.contains(r)).expect("safe configurations have a safe reply")
            };
            moves.insert((d, a), reply);
        }
    }
    Ok(StrategyFamily { rules, k, family: safe.members, moves })
}

/// The eviction safe set for `k` guards with a lowest-index reply to every attack.
pub fn extract_eviction_family(g: &Graph, k: usize) -> Result<StrategyFamily, GameError> {
    extract(g, k, Rules::Eviction, &Limits::default())
}

pub fn extract_eternal_family(g: &Graph, k: usize) -> Result<StrategyFamily, GameError> {
    extract(g, k, Rules::EternalDomination, &Limits::default())
}

fn check_members(g: &Graph, fam: &StrategyFamily) -> Result<BTreeSet<VertexSet>, FamilyViolation> {
    if fam.family.is_empty() {
        return Err(FamilyViolation::Empty);
    }
    let mut set = BTreeSet::new();
    for &d in &fam.family {
        if d.len() != fam.k || !d.is_subset(g.vertices()) {
            return Err(FamilyViolation::WrongSize { config: d, k: fam.k });
        }
        if !g.is_dominating(d) {
            return Err(FamilyViolation::NotDominating { config: d });
        }
        set.insert(d);
    }
    Ok(set)
}

/// Checks an eviction family from the definition: every member dominates,
/// and each attacked guard is either surrounded or has an unoccupied
/// neighbour to move to that keeps the configuration in the family. When
/// `moves` is nonempty, each recorded reply must itself be such a move.
pub fn verify_eviction_family(g: &Graph, fam: &StrategyFamily) -> Result<(), FamilyViolation> {
    let members = check_members(g, fam)?;
    for &d in &members {
        for v in d {
            let surrounded = g.closed_neighborhood(v).is_subset(d);
            let legal = |r: VertexSet| {
                if surrounded {
                    r == d
                } else {
                    let w = (r - d).first();
                    r.len() == d.len() && (d - r) == VertexSet::singleton(v) && w.is_some_and(|w| g.has_edge(v, w))
                }
            };
            if !surrounded && !(g.neighbors(v) - d).iter().any(|w| members.contains(&d.without(v).with(w))) {
                return Err(FamilyViolation::NoReply { config: d, attack: v });
            }
            check_move(fam, &members, d, v, legal)?;
        }
    }
    Ok(())
}

/// Checks an eternal domination family: every member dominates, and for each
/// unoccupied `w` some guard on a neighbour of `w` can step onto it and land
/// in the family.
pub fn verify_eternal_family(g: &Graph, fam: &StrategyFamily) -> Result<(), FamilyViolation> {
    let members = check_members(g, fam)?;
    for &d in &members {
        for w in g.vertices() - d {
            if !(g.neighbors(w) & d).iter().any(|v| members.contains(&d.without(v).with(w))) {
                return Err(FamilyViolation::NoReply { config: d, attack: w });
            }
            let legal = |r: VertexSet| {
                let gone = (d - r).first();
                r.len() == d.len() && (r - d) == VertexSet::singleton(w) && gone.is_some_and(|v| g.has_edge(v, w))
            };
            check_move(fam, &members, d, w, legal)?;
        }
    }
    Ok(())
}

fn check_move(
    fam: &StrategyFamily,
    members: &BTreeSet<VertexSet>,
    d: VertexSet,
    attack: usize,
    legal: impl Fn(VertexSet) -> bool,
) -> Result<(), FamilyViolation> {
    if fam.moves.is_empty() {
        return Ok(());
    }
    match fam.moves.get(&(d, attack)) {
        None => Err(FamilyViolation::MissingMove { config: d, attack }),
        Some(&r) if !legal(r) || !members.contains(&r) => Err(FamilyViolation::BadMove { config: d, attack, reply: r }),
        Some(_) => Ok(()),
    }
}
