//! Ramsey numbers, the constants c_k of the array lemma, the upper bound
//! f(k) on the eviction number in terms of α, and per-graph bound reports.

mod ramsey;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{eternal_domination_number_with, eviction_number_with, Limits};
use crate::graph::Graph;
use crate::invariants::{clique_cover_number, domination_number, independence_number, is_triangle_free};

pub use ramsey::{brute_force_ramsey, ramsey_number, Interval, RamseyBound, RamseyTable, Source, TableEntry};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("ramsey table line {line}: {reason}")]
    Table { line: usize, reason: String },
    #[error("{0}")]
    Argument(String),
}

/// Largest α for which reports evaluate f(α) from the full chain; beyond
/// this the numbers run to millions of digits.
pub const F_REPORT_MAX_ALPHA: usize = 6;

/// `l_k, l_{k-1}, ..., l_0` with `l_k = k + 1` and `l_{j-1} = r(k+1, l_j)`.
/// Each entry is an interval; `l_0` bounds c_k from above.
pub fn l_chain(k: usize) -> Result<Vec<Interval>, BoundsError> {
    if k == 0 {
        return Err(BoundsError::Argument("l_chain needs k >= 1".into()));
    }
    let s = u32::try_from(k + 1).map_err(|_| BoundsError::Argument("k too large".into()))?;
    let table = RamseyTable::bundled();
    let mut chain = vec![Interval::exact(BigUint::from(k + 1))];
    for _ in 0..k {
        let prev = chain.last().expect("chain starts nonempty");
        // r is nondecreasing in each argument, so endpoints map to endpoints
        let lo = table.bounds(s, &prev.lo)?.value.lo;
        let hi = table.bounds(s, &prev.hi)?.value.hi;
        chain.push(Interval { lo, hi });
    }
    Ok(chain)
}

/// Upper bound on c_k from the chain (the interval of `l_0`).
pub fn c_bound(k: usize) -> Result<Interval, BoundsError> {
    Ok(l_chain(k)?.pop().expect("chain is nonempty"))
}

/// f(1) = 1 and f(k) = 2·k·c·(k^(k-1) - 1)/(k - 1) for k ≥ 2.
pub fn f_bound(k: usize, c_k: &BigUint) -> Result<BigUint, BoundsError> {
    match k {
        0 => Err(BoundsError::Argument("f is defined for k >= 1".into())),
        1 => Ok(BigUint::one()),
        _ => Ok(BigUint::from(2u32) * geometric_part(k, c_k)),
    }
}

/// k·c·(k^(k-1) - 1)/(k - 1) = c·(k + k² + ... + k^(k-1)).
fn geometric_part(k: usize, c_k: &BigUint) -> BigUint {
    let kb = BigUint::from(k);
    let num = kb.pow(k as u32 - 1) - 1u32;
    let den = BigUint::from(k - 1);
    debug_assert!((&num % &den).is_zero());
    kb * c_k * num / den
}

/// Per-level cap `k^(i+1)·c` on |S_i| together with the cap
/// `k·c·(k^(k-1) - 1)/(k - 1)` on their total.
pub fn s_cascade_bound(k: usize, c_k: &BigUint, i: usize) -> Result<(BigUint, BigUint), BoundsError> {
    if k < 2 || i > k - 2 {
        return Err(BoundsError::Argument(format!("level {i} out of range for k = {k}")));
    }
    let level = BigUint::from(k).pow(i as u32 + 1) * c_k;
    Ok((level, geometric_part(k, c_k)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub alpha: usize,
    pub gamma: usize,
    pub theta: usize,
    pub eviction: Option<usize>,
    pub eternal: Option<usize>,
    /// Why the exact game values are missing, when they were requested.
    pub skipped: Option<String>,
    /// Upper bound on c_α from the chain.
    pub c_alpha: Option<Interval>,
    /// f(α) evaluated at the upper end of `c_alpha`.
    pub f_alpha_bound: Option<BigUint>,
    pub checks: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

pub fn bound_report(g: &Graph, with_exact_game: bool) -> BoundReport {
    bound_report_with(g, with_exact_game.then(Limits::default).as_ref())
}

/// Bound report; exact game values are computed under `limits` when given.
pub fn bound_report_with(g: &Graph, limits: Option<&Limits>) -> BoundReport {
    let (mut eviction, mut eternal, mut skipped) = (None, None, None);
    if let Some(limits) = limits {
        match eviction_number_with(g, limits) {
            Ok(e) => eviction = Some(e),
            Err(e) => skipped = Some(format!("eviction: {e}")),
        }
        match eternal_domination_number_with(g, limits) {
            Ok(e) => eternal = Some(e),
            Err(e) => skipped = Some(format!("eternal domination: {e}")),
        }
    }
    let mut report = bound_report_from_values(g, eviction, eternal);
    report.skipped = skipped;
    report
}

/// Bound report around game values computed elsewhere.
pub fn bound_report_from_values(g: &Graph, eviction: Option<usize>, eternal: Option<usize>) -> BoundReport {
    let alpha = independence_number(g).0;
    let gamma = domination_number(g).0;
    let theta = clique_cover_number(g).0;
    let (c_alpha, f_alpha_bound) = if alpha <= F_REPORT_MAX_ALPHA {
        let c = c_bound(alpha).ok();
        let f = c.as_ref().and_then(|c| f_bound(alpha, &c.hi).ok());
        (c, f)
    } else {
        (None, None)
    };

    let mut checks = vec![BoundCheck { name: "gamma <= alpha <= theta".into(), holds: gamma <= alpha && alpha <= theta }];
    let mut push = |name: &str, holds: bool| checks.push(BoundCheck { name: name.into(), holds });
    if let Some(e) = eviction {
        push("gamma <= eviction <= theta", gamma <= e && e <= theta);
        if let Some(f) = &f_alpha_bound {
            push("eviction <= f(alpha)", &BigUint::from(e) <= f);
        }
        if is_triangle_free(g) {
            push("triangle-free: eviction >= alpha", e >= alpha);
        }
        match alpha {
            1 => push("alpha = 1: eviction = 1", e == 1),
            2 => push("alpha = 2: eviction <= 2", e <= 2),
            3 => push("alpha = 3: eviction <= 5", e <= 5),
            _ => {}
        }
    }
    if let Some(ed) = eternal {
        push("alpha <= eternal <= C(alpha+1, 2)", alpha <= ed && ed <= alpha * (alpha + 1) / 2);
    }
    BoundReport { n: g.n(), alpha, gamma, theta, eviction, eternal, skipped: None, c_alpha, f_alpha_bound, checks }
}
