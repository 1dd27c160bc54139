use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

use super::{solver, AttackCertificate, Rules, StrategyFamily};

/// Chooses the defender's reply to an attack.
pub trait Responder {
    /// The configuration after answering `attack` in `d`, or `None` to give up.
    fn respond(&mut self, g: &Graph, rules: Rules, d: VertexSet, attack: usize) -> Option<VertexSet>;
}

/// Chooses the next vertex to attack; `None` ends the game.
pub trait Attacker {
    fn next_attack(&mut self, g: &Graph, rules: Rules, d: VertexSet) -> Option<usize>;
}

impl Responder for StrategyFamily {
    fn respond(&mut self, _g: &Graph, _rules: Rules, d: VertexSet, attack: usize) -> Option<VertexSet> {
        self.reply(d, attack)
    }
}

/// Plays the lowest legal reply that keeps the guards dominating, or the
/// lowest legal reply if none does.
#[derive(Clone, Copy, Debug, Default)]
pub struct GreedyResponder;

impl Responder for GreedyResponder {
    fn respond(&mut self, g: &Graph, rules: Rules, d: VertexSet, attack: usize) -> Option<VertexSet> {
        let mut first = None;
        for r in solver::replies(g, rules, d, attack) {
            if g.is_dominating(r) {
                return Some(r);
            }
            first.get_or_insert(r);
        }
        first
    }
}

/// Replays a fixed list of attacks.
#[derive(Clone, Debug)]
pub struct SequenceAttacker {
    attacks: Vec<usize>,
    pos: usize,
}

impl SequenceAttacker {
    pub fn new(attacks: Vec<usize>) -> Self {
        SequenceAttacker { attacks, pos: 0 }
    }
}

impl Attacker for SequenceAttacker {
    fn next_attack(&mut self, _g: &Graph, _rules: Rules, _d: VertexSet) -> Option<usize> {
        let a = self.attacks.get(self.pos).copied();
        self.pos += 1;
        a
    }
}

/// Attacks a uniformly random legal vertex each round.
#[derive(Clone, Debug)]
pub struct RandomAttacker {
    rng: ChaCha8Rng,
}

impl RandomAttacker {
    pub fn new(seed: u64) -> Self {
        RandomAttacker { rng: ChaCha8Rng::seed_from_u64(seed) }
    }
}

impl Attacker for RandomAttacker {
    fn next_attack(&mut self, g: &Graph, rules: Rules, d: VertexSet) -> Option<usize> {
        solver::attacks(g, rules, d).iter().choose(&mut self.rng)
    }
}

/// Follows a certificate; off the certificate it attacks the lowest legal vertex.
#[derive(Clone, Debug)]
pub struct CertificateAttacker<'a> {
    cert: &'a AttackCertificate,
}

impl<'a> CertificateAttacker<'a> {
    pub fn new(cert: &'a AttackCertificate) -> Self {
        CertificateAttacker { cert }
    }
}

impl Attacker for CertificateAttacker<'_> {
    fn next_attack(&mut self, g: &Graph, rules: Rules, d: VertexSet) -> Option<usize> {
        self.cert.attack_for(d).or_else(|| solver::attacks(g, rules, d).first())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepOutcome {
    Moved,
    /// The attacked guard was surrounded and stayed put.
    Stayed,
    /// The attacked vertex is not a legal target; the attacker plays again.
    Rejected,
    /// A move was required but the responder gave none.
    NoMove,
    /// The responder's reply was not a legal move.
    IllegalReply,
    /// The reply left some vertex undominated.
    NotDominating,
}

impl StepOutcome {
    pub fn is_violation(self) -> bool {
        matches!(self, StepOutcome::NoMove | StepOutcome::IllegalReply | StepOutcome::NotDominating)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub step: usize,
    pub attack: usize,
    pub before: VertexSet,
    pub after: VertexSet,
    pub outcome: StepOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub initial: VertexSet,
    pub steps: Vec<Step>,
    /// Index into `steps` of the first violation, if any.
    pub violation: Option<usize>,
}

impl Transcript {
    pub fn final_config(&self) -> VertexSet {
        self.steps.iter().rev().find(|s| s.outcome != StepOutcome::Rejected).map_or(self.initial, |s| s.after)
    }

    /// One JSON object per step.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&serde_json::to_string(s).expect("steps serialize"));
            out.push('\n');
        }
        out
    }
}

/// Plays up to `steps` attacks from `initial` and stops at the first violation.
pub fn simulate(
    g: &Graph,
    rules: Rules,
    responder: &mut dyn Responder,
    initial: VertexSet,
    attacker: &mut dyn Attacker,
    steps: usize,
) -> Transcript {
    let mut d = initial;
    let mut log = Vec::new();
    let mut violation = None;
    for step in 0..steps {
        let Some(attack) = attacker.next_attack(g, rules, d) else { break };
        let legal_target = attack < g.n() && solver::attacks(g, rules, d).contains(attack);
        let (after, outcome) = if !legal_target {
            (d, StepOutcome::Rejected)
        } else if rules == Rules::Eviction && g.closed_neighborhood(attack).is_subset(d) {
            (d, StepOutcome::Stayed)
        } else {
            match responder.respond(g, rules, d, attack) {
                None => (d, StepOutcome::NoMove),
                Some(r) if !solver::replies(g, rules, d, attack).any(|x| x == r) => (r, StepOutcome::IllegalReply),
                Some(r) if !g.is_dominating(r) => (r, StepOutcome::NotDominating),
                Some(r) => (r, StepOutcome::Moved),
            }
        };
        log.push(Step { step, attack, before: d, after, outcome });
        if outcome.is_violation() {
            violation = Some(log.len() - 1);
            break;
        }
        d = after;
    }
    Transcript { initial, steps: log, violation }
}
