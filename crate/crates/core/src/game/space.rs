//! Dense indexing of the k-subsets of `0..n` by colexicographic rank.

use crate::graph::VertexSet;

pub(crate) struct ConfigSpace {
    n: usize,
    k: usize,
    /// `binom[v][i]` = C(v, i) for v ≤ n, i ≤ k.
    binom: Vec<Vec<u64>>,
    size: u64,
}

impl ConfigSpace {
    pub fn new(n: usize, k: usize) -> ConfigSpace {
        let mut binom = vec![vec![0u64; k + 1]; n + 1];
        for v in 0..=n {
            binom[v][0] = 1;
            for i in 1..=k.min(v) {
                binom[v][i] = binom[v - 1][i - 1].saturating_add(if i <= v - 1 { binom[v - 1][i] } else { 0 });
            }
        }
        let size = binom[n][k];
        ConfigSpace { n, k, binom, size }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Position of `set` in increasing numeric order of k-subsets.
    #[inline]
    pub fn rank(&self, set: VertexSet) -> usize {
        let mut r = 0u64;
        for (i, v) in set.iter().enumerate() {
            r += self.binom[v][i + 1];
        }
        r as usize
    }

    /// All k-subsets in rank order (Gosper's hack).
    pub fn iter(&self) -> impl Iterator<Item = VertexSet> {
        let limit: u128 = 1u128 << self.n;
        let mut cur: u128 = if self.k == 0 { 0 } else { (1u128 << self.k) - 1 };
        let mut done = self.k > self.n;
        let k = self.k;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = VertexSet::from_bits(cur as u64);
            if k == 0 {
                done = true;
                return Some(out);
            }
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
            if cur >= limit {
                done = true;
            }
            Some(out)
        })
    }
}
