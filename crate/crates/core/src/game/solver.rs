//! Retrograde greatest-fixed-point computation shared by both games.
//!
//! Every dominating k-configuration starts alive. For each alive
//! configuration and each attack the solver keeps a counter of alive
//! replies; when a configuration dies, the counters of its predecessors are
//! decremented and any that reach zero die in turn. Predecessors are found
//! by reversing a single guard move: for `w ∈ D'` and `v ∈ N(w) ∖ D'`,
//! `D = D' ∪ {v} ∖ {w}` reaches `D'` by moving a guard from `v` to `w`.

use std::collections::VecDeque;
use std::time::Instant;

use crate::graph::{Graph, VertexSet};

use super::space::ConfigSpace;
use super::{GameError, Limits, Rules};

const NO_ATTACK: u8 = u8::MAX;
/// Counter value for attacks that cannot hurt (a surrounded guard stays put).
const HARMLESS: u8 = u8::MAX;

pub(crate) struct FixedPoint {
    pub space: ConfigSpace,
    pub dominating: Vec<bool>,
    pub alive: Vec<bool>,
    /// For configurations killed by the attacker: the attack that forces the loss.
    pub killer: Vec<u8>,
    /// Longest play (in attacks) to a non-dominating configuration under `killer`.
    pub depth: Vec<u32>,
}

/// Attacks available in `d` and how to index them into `slots` counters.
fn slots(rules: Rules, n: usize, k: usize) -> usize {
    match rules {
        Rules::Eviction => k,
        Rules::EternalDomination => n - k,
    }
}

#[inline]
fn slot_of(rules: Rules, d: VertexSet, attack: usize, all: VertexSet) -> usize {
    match rules {
        Rules::Eviction => d.rank_of(attack),
        Rules::EternalDomination => (all - d).rank_of(attack),
    }
}

/// Legal defender replies to `attack` in `d`, excluding the surrounded self-loop.
#[inline]
pub(crate) fn replies(g: &Graph, rules: Rules, d: VertexSet, attack: usize) -> impl Iterator<Item = VertexSet> {
    let (movers, target): (VertexSet, Option<usize>) = match rules {
        // the guard on `attack` moves to an unoccupied neighbour
        Rules::Eviction => (g.neighbors(attack) - d, None),
        // a guard on a neighbour of `attack` moves onto it
        Rules::EternalDomination => (g.neighbors(attack) & d, Some(attack)),
    };
    movers.iter().map(move |x| match target {
        None => d.without(attack).with(x),
        Some(w) => d.without(x).with(w),
    })
}

/// Attacks the attacker may play in `d`.
#[inline]
pub(crate) fn attacks(g: &Graph, rules: Rules, d: VertexSet) -> VertexSet {
    match rules {
        Rules::Eviction => d,
        Rules::EternalDomination => g.vertices() - d,
    }
}

pub(crate) fn solve(g: &Graph, k: usize, rules: Rules, limits: &Limits) -> Result<FixedPoint, GameError> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(GameError::InvalidGuardCount { k, n });
    }
    let space = ConfigSpace::new(n, k);
    if space.size() > limits.max_states {
        return Err(GameError::StateSpaceTooLarge { states: space.size(), cap: limits.max_states });
    }
    let size = space.size() as usize;
    let nslots = slots(rules, n, k);
    let all = g.vertices();
    let check_deadline = |counter: usize| -> Result<(), GameError> {
        if counter & 0xfff == 0 {
            if let Some(deadline) = limits.deadline {
                if Instant::now() >= deadline {
                    return Err(GameError::Timeout);
                }
            }
        }
        Ok(())
    };

    let configs: Vec<VertexSet> = space.iter().collect();
    let dominating: Vec<bool> = configs.iter().map(|&d| g.is_dominating(d)).collect();
    let mut alive = dominating.clone();

    let mut counts = vec![0u8; size * nslots];
    for (i, &d) in configs.iter().enumerate() {
        check_deadline(i)?;
        if !alive[i] {
            continue;
        }
        for a in attacks(g, rules, d) {
            let slot = i * nslots + slot_of(rules, d, a, all);
            if rules == Rules::Eviction && g.closed_neighborhood(a).is_subset(d) {
                counts[slot] = HARMLESS;
                continue;
            }
            counts[slot] = replies(g, rules, d, a).filter(|&r| alive[space.rank(r)]).count() as u8;
        }
    }

    let mut killer = vec![NO_ATTACK; size];
    let mut depth = vec![0u32; size];
    let mut queue = VecDeque::new();

    let kill = |i: usize, a: usize, alive: &mut Vec<bool>, killer: &mut Vec<u8>, depth: &mut Vec<u32>| {
        alive[i] = false;
        killer[i] = a as u8;
        let d = configs[i];
        let worst = replies(g, rules, d, a).map(|r| depth[space.rank(r)]).max().unwrap_or(0);
        depth[i] = worst + 1;
    };

    for i in 0..size {
        if !alive[i] {
            continue;
        }
        let d = configs[i];
        if let Some(a) = attacks(g, rules, d).iter().find(|&a| counts[i * nslots + slot_of(rules, d, a, all)] == 0) {
            // replies are all non-dominating here, so depth is 1
            kill(i, a, &mut alive, &mut killer, &mut depth);
            queue.push_back(i);
        }
    }

    let mut processed = 0usize;
    while let Some(j) = queue.pop_front() {
        processed += 1;
        check_deadline(processed)?;
        let dead = configs[j];
        for w in dead {
            for v in g.neighbors(w) - dead {
                let pred = dead.with(v).without(w);
                let i = space.rank(pred);
                if !alive[i] {
                    continue;
                }
                let attacked = match rules {
                    Rules::Eviction => v,
                    Rules::EternalDomination => w,
                };
                let slot = i * nslots + slot_of(rules, pred, attacked, all);
                debug_assert!(counts[slot] != HARMLESS && counts[slot] > 0);
                counts[slot] -= 1;
                if counts[slot] == 0 {
                    kill(i, attacked, &mut alive, &mut killer, &mut depth);
                    queue.push_back(i);
                }
            }
        }
    }

    Ok(FixedPoint { space, dominating, alive, killer, depth })
}

impl FixedPoint {
    pub fn configs(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.space.iter()
    }

    pub fn safe_members(&self) -> Vec<VertexSet> {
        self.space.iter().zip(&self.alive).filter(|(_, &a)| a).map(|(d, _)| d).collect()
    }

    pub fn killer_of(&self, i: usize) -> Option<usize> {
        (self.killer[i] != NO_ATTACK).then_some(self.killer[i] as usize)
    }
}
