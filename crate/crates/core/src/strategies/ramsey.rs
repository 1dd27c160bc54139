use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::invariants::max_independent_set_within;

use super::StrategyError;

/// A (k+1) × k array of distinct vertices whose rows are maximum independent
/// sets and whose columns are cliques.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyArray {
    pub k: usize,
    /// `cells[i][j]` is the vertex in row `i`, column `j`.
    pub cells: Vec<Vec<usize>>,
}

impl RamseyArray {
    pub fn row(&self, i: usize) -> VertexSet {
        self.cells[i].iter().copied().collect()
    }

    pub fn column(&self, j: usize) -> VertexSet {
        self.cells.iter().map(|r| r[j]).collect()
    }

    pub fn support(&self) -> VertexSet {
        self.cells.iter().flatten().copied().collect()
    }

    pub fn column_of(&self, v: usize) -> Option<usize> {
        self.cells.iter().find_map(|r| r.iter().position(|&x| x == v))
    }

    /// Relabels every cell through `labels` (e.g. from an induced subgraph).
    pub fn relabel(&self, labels: &[usize]) -> RamseyArray {
        RamseyArray { k: self.k, cells: self.cells.iter().map(|r| r.iter().map(|&v| labels[v]).collect()).collect() }
    }

    /// Checks shape, distinctness, independent rows, clique columns, and that
    /// `k` is the independence number of the subgraph induced by `host`.
    pub fn validate(&self, g: &Graph, host: VertexSet) -> Result<(), String> {
        let k = self.k;
        if k == 0 || self.cells.len() != k + 1 || self.cells.iter().any(|r| r.len() != k) {
            return Err(format!("array is not {} x {k}", k + 1));
        }
        let support = self.support();
        if support.len() != k * (k + 1) || !support.is_subset(host) || !host.is_subset(g.vertices()) {
            return Err("cells are not distinct vertices of the host".into());
        }
        if max_independent_set_within(g, host).len() != k {
            return Err(format!("independence number of the host is not {k}"));
        }
        for i in 0..=k {
            if !g.is_independent(self.row(i)) {
                return Err(format!("row {i} is not independent"));
            }
        }
        for j in 0..k {
            if !g.is_clique(self.column(j)) {
                return Err(format!("column {j} is not a clique"));
            }
        }
        Ok(())
    }

    /// Rows `0..k` fully guarded, last row empty.
    pub fn initial_guards(&self) -> VertexSet {
        (0..self.k).fold(VertexSet::EMPTY, |acc, i| acc | self.row(i))
    }

    fn check_columns(&self, c: VertexSet) -> Result<(), StrategyError> {
        for j in 0..self.k {
            let guards = (self.column(j) & c).len();
            if guards != self.k {
                return Err(StrategyError::MalformedColumn { column: j, guards, expected: self.k });
            }
        }
        Ok(())
    }
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    rows: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Fills row `rows.len()`, column by column. Rows after the first are kept
    /// in increasing order of their first cell.
    fn fill(&mut self, row: &mut Vec<usize>, used: VertexSet, avail: VertexSet) -> bool {
        let j = row.len();
        if j == self.k {
            self.rows.push(row.clone());
            let done = self.rows.len() == self.k + 1 || self.next_row(used);
            if !done {
                self.rows.pop();
            }
            return done;
        }
        let mut cand = avail - used;
        for r in &self.rows {
            cand = cand & self.g.neighbors(r[j]);
        }
        if j == 0 && self.rows.len() >= 2 {
            if let Some(prev) = self.rows.last() {
                cand = cand - VertexSet::full(prev[0] + 1);
            }
        }
        for v in cand {
            row.push(v);
            if self.fill(row, used.with(v), avail - self.g.neighbors(v)) {
                return true;
            }
            row.pop();
        }
        false
    }

    fn next_row(&mut self, used: VertexSet) -> bool {
        let mut row = Vec::with_capacity(self.k);
        self.fill(&mut row, used, self.g.vertices())
    }
}

/// A Ramsey array for k = α(G), found by backtracking over the graph, or
/// `None` if the graph has none.
pub fn find_ramsey_array(g: &Graph) -> Option<RamseyArray> {
    let k = max_independent_set_within(g, g.vertices()).len();
    if k == 0 || k * (k + 1) > g.n() {
        return None;
    }
    // the first row fixes the column order: its cells ascend
    let mut search = Search { g, k, rows: Vec::with_capacity(k + 1) };
    let mut first = Vec::with_capacity(k);
    fn first_row(s: &mut Search, row: &mut Vec<usize>, avail: VertexSet) -> bool {
        if row.len() == s.k {
            s.rows.push(row.clone());
            let used = row.iter().copied().collect();
            if s.next_row(used) {
                return true;
            }
            s.rows.pop();
            return false;
        }
        let floor = row.last().map_or(VertexSet::EMPTY, |&v| VertexSet::full(v + 1));
        for v in avail - floor {
            row.push(v);
            if first_row(s, row, avail - s.g.neighbors(v).with(v)) {
                return true;
            }
            row.pop();
        }
        false
    }
    if first_row(&mut search, &mut first, g.vertices()) {
        Some(RamseyArray { k, cells: search.rows })
    } else {
        None
    }
}

/// Moves the attacked guard to the one unoccupied cell of its column.
pub fn ramsey_defend(arr: &RamseyArray, c: VertexSet, attack: usize) -> Result<VertexSet, StrategyError> {
    let j = arr.column_of(attack).ok_or(StrategyError::NotInArray(attack))?;
    if !c.contains(attack) {
        return Err(StrategyError::NotGuarded(attack));
    }
    arr.check_columns(c)?;
    let free = (arr.column(j) - c).first().expect("a column of k+1 cells with k guards has a free cell");
    Ok(c.without(attack).with(free))
}

/// Index of the lowest fully guarded row.
pub fn ramsey_domination_witness(arr: &RamseyArray, c: VertexSet) -> Result<usize, StrategyError> {
    arr.check_columns(c)?;
    (0..=arr.k).find(|&i| arr.row(i).is_subset(c)).ok_or(StrategyError::NoFullRow)
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

    /// Exhaustive check: try every choice of k+1 disjoint maximum independent
    /// sets and every assignment of their vertices to columns.
    fn brute_has_array(g: &Graph) -> bool {
        let k = max_independent_set_within(g, g.vertices()).len();
        brute_rows(g, k, &[], VertexSet::EMPTY, 0)
    }

    fn brute_rows(g: &Graph, k: usize, chosen: &[Vec<usize>], used: VertexSet, start: usize) -> bool {
        if chosen.len() == k + 1 {
            return true;
        }
        let sets = crate::invariants::maximum_independent_sets(g);
        for (idx, s) in sets.iter().enumerate().skip(start) {
            if !s.is_disjoint(used) {
                continue;
            }
            let mut perm = s.to_vec();
            if chosen.is_empty() {
                let next = vec![perm.clone()];
                if brute_rows(g, k, &next, used | *s, idx + 1) {
                    return true;
                }
                continue;
            }
            // every ordering of this row against the fixed columns
            let mut found = false;
            permute(&mut perm, 0, &mut |p| {
                if !found && (0..k).all(|j| chosen.iter().all(|r| g.has_edge(r[j], p[j]))) {
                    let mut next = chosen.to_vec();
                    next.push(p.to_vec());
                    found = brute_rows(g, k, &next, used | *s, idx + 1);
                }
            });
            if found {
                return true;
            }
        }
        false
    }

    fn permute(v: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize])) {
        if i == v.len() {
            f(v);
            return;
        }
        for j in i..v.len() {
            v.swap(i, j);
            permute(v, i + 1, f);
            v.swap(i, j);
        }
    }

    #[test]
    fn cliques_of_size_k_plus_one() {
        for k in 1..=3 {
            let g = gen(&format!("copies({k},complete:{})", k + 1));
            let arr = find_ramsey_array(&g).unwrap();
            arr.validate(&g, g.vertices()).unwrap();
            // columns are the clique copies
            for j in 0..k {
                let col = arr.column(j);
                assert!(g.components().contains(&col));
            }
        }
    }

    #[test]
    fn absent_cases() {
        assert!(find_ramsey_array(&gen("cycle:7")).is_none());
        assert!(find_ramsey_array(&gen("path:1")).is_none());
        assert!(find_ramsey_array(&gen("complete:2")).is_some());
    }

    #[test]
    fn search_matches_exhaustive_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..150 {
            let n = rng.gen_range(2..=9);
            let g = Graph::random(n, rng.gen_range(0.3..0.9), &mut rng).unwrap();
            let found = find_ramsey_array(&g);
            if let Some(a) = &found {
                a.validate(&g, g.vertices()).unwrap();
            }
            assert_eq!(found.is_some(), brute_has_array(&g), "{:?}", g.edges());
        }
    }

    #[test]
    fn defend_stays_in_column() {
        let g = gen("copies(3,complete:4)");
        let arr = find_ramsey_array(&g).unwrap();
        let mut c = arr.initial_guards();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..500 {
            let a = c.iter().nth(rng.gen_range(0..c.len())).unwrap();
            let next = ramsey_defend(&arr, c, a).unwrap();
            let moved_to = (next - c).first().unwrap();
            assert_eq!(arr.column_of(moved_to), arr.column_of(a));
            c = next;
            let m = ramsey_domination_witness(&arr, c).unwrap();
            assert!(g.is_dominating(arr.row(m)));
        }
    }

    #[test]
    fn double_attack_on_a_column() {
        let g = gen("copies(2,complete:3)");
        let arr = find_ramsey_array(&g).unwrap();
        let c = arr.initial_guards();
        let a = arr.cells[0][0];
        let once = ramsey_defend(&arr, c, a).unwrap();
        let b = (once - c).first().unwrap();
        let twice = ramsey_defend(&arr, once, b).unwrap();
        assert_eq!(twice, c);
    }

    #[test]
    fn contract_errors() {
        let g = gen("copies(2,complete:3)");
        let arr = find_ramsey_array(&g).unwrap();
        let c = arr.initial_guards();
        let free = arr.cells[2][0];
        assert_eq!(ramsey_defend(&arr, c, free), Err(StrategyError::NotGuarded(free)));
        assert_eq!(ramsey_defend(&arr, c, 40), Err(StrategyError::NotInArray(40)));
        let bad = c.without(arr.cells[0][1]);
        assert!(matches!(ramsey_defend(&arr, bad, arr.cells[0][0]), Err(StrategyError::MalformedColumn { .. })));
        assert_eq!(ramsey_domination_witness(&arr, c), Ok(0));
    }
}
