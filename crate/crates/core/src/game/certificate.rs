use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

use super::{solver, GameAnalysis, GameError, Limits, Rules, Status};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateEntry {
    pub attack: usize,
    /// Most attacks still needed to reach a non-dominating configuration.
    pub depth: u32,
}

/// A winning attacker strategy: for every dominating k-configuration, the
/// attack to play and the number of rounds within which it wins.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "CertificateJson", from = "CertificateJson")]
pub struct AttackCertificate {
    pub rules: Rules,
    pub k: usize,
    pub entries: BTreeMap<VertexSet, CertificateEntry>,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    rules: Rules,
    k: usize,
    entries: Vec<(VertexSet, CertificateEntry)>,
}

impl From<AttackCertificate> for CertificateJson {
    fn from(c: AttackCertificate) -> Self {
        CertificateJson { rules: c.rules, k: c.k, entries: c.entries.into_iter().collect() }
    }
}

impl From<CertificateJson> for AttackCertificate {
    fn from(j: CertificateJson) -> Self {
        AttackCertificate { rules: j.rules, k: j.k, entries: j.entries.into_iter().collect() }
    }
}

/// One node of an unrolled certificate: the position, the attack, and the
/// subtree for each defender reply. Leaves are non-dominating positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateNode {
    pub config: VertexSet,
    pub attack: Option<usize>,
    pub replies: Vec<CertificateNode>,
}

impl CertificateNode {
    pub fn leaves(&self) -> usize {
        if self.replies.is_empty() {
            1
        } else {
            self.replies.iter().map(|r| r.leaves()).sum()
        }
    }

    pub fn height(&self) -> usize {
        self.replies.iter().map(|r| r.height() + 1).max().unwrap_or(0)
    }
}

/// Certificate that `k` guards lose, or `DefenderWins` if some dominating
/// configuration is safe.
pub fn attacker_certificate(g: &Graph, k: usize, rules: Rules, limits: &Limits) -> Result<AttackCertificate, GameError> {
    let analysis = GameAnalysis::new(g, k, rules, limits)?;
    if analysis.defender_wins() {
        return Err(GameError::DefenderWins { k });
    }
    let mut entries = BTreeMap::new();
    for d in analysis.fixed_point().configs() {
        if let Some(Status::Losing { attack, depth }) = analysis.status(d) {
            entries.insert(d, CertificateEntry { attack, depth });
        }
    }
    Ok(AttackCertificate { rules, k, entries })
}

impl AttackCertificate {
    pub fn attack_for(&self, d: VertexSet) -> Option<usize> {
        self.entries.get(&d).map(|e| e.attack)
    }

    /// Longest forced play over all starting positions.
    pub fn depth(&self) -> u32 {
        self.entries.values().map(|e| e.depth).max().unwrap_or(0)
    }

    /// Checks the certificate without the solver: it must cover every
    /// dominating k-set, each recorded attack must be legal and not a
    /// surrounded self-loop, and every reply must be non-dominating or a
    /// covered position of strictly smaller depth.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        let covered = |d: VertexSet| d.iter().fold(VertexSet::EMPTY, |acc, v| acc | g.closed_neighborhood(v));
        let mut count = 0usize;
        let mut stack = vec![(0usize, VertexSet::EMPTY)];
        while let Some((start, cur)) = stack.pop() {
            if cur.len() == self.k {
                if covered(cur) == g.vertices() {
                    count += 1;
                    if !self.entries.contains_key(&cur) {
                        return Err(format!("dominating configuration {cur} has no attack"));
                    }
                }
                continue;
            }
            for v in start..g.n() {
                stack.push((v + 1, cur.with(v)));
            }
        }
        if count != self.entries.len() {
            return Err(format!("{} entries but {count} dominating configurations", self.entries.len()));
        }
        for (&d, e) in &self.entries {
            let legal = match self.rules {
                Rules::Eviction => d.contains(e.attack) && !g.closed_neighborhood(e.attack).is_subset(d),
                Rules::EternalDomination => e.attack < g.n() && !d.contains(e.attack),
            };
            if !legal || e.depth == 0 {
                return Err(format!("attack on {} is not a winning move in {d}", e.attack));
            }
            for r in solver::replies(g, self.rules, d, e.attack) {
                if covered(r) != g.vertices() {
                    continue;
                }
                match self.entries.get(&r) {
                    Some(next) if next.depth < e.depth => {}
                    _ => return Err(format!("reply {r} to {} in {d} does not make progress", e.attack)),
                }
            }
        }
        Ok(())
    }

    /// The full game tree from `start` under this certificate.
    pub fn decision_tree(&self, g: &Graph, start: VertexSet) -> CertificateNode {
        match self.entries.get(&start) {
            None => CertificateNode { config: start, attack: None, replies: Vec::new() },
            Some(e) => CertificateNode {
                config: start,
                attack: Some(e.attack),
                replies: solver::replies(g, self.rules, start, e.attack).map(|r| self.decision_tree(g, r)).collect(),
            },
        }
    }
}
