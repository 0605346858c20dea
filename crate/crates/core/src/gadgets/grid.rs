//! `k × k` grid problems: the sources of the lower-bound constructions.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::GadgetError;

/// A cell `(row, column)`, both 0-indexed.
pub type Cell = (usize, usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridVariant {
    IndependentSet,
    PermutationIndependentSet,
    Clique,
    PermutationClique,
}

impl GridVariant {
    pub fn is_permutation(self) -> bool {
        matches!(self, GridVariant::PermutationIndependentSet | GridVariant::PermutationClique)
    }

    pub fn is_clique(self) -> bool {
        matches!(self, GridVariant::Clique | GridVariant::PermutationClique)
    }
}

/// A graph on the cells of a `k × k` grid. A solution picks one cell per
/// column (and, for permutation variants, one per row) forming an
/// independent set or a clique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridProblemInstance {
    pub k: usize,
    /// Edges with the smaller cell first, sorted.
    pub edges: Vec<(Cell, Cell)>,
    pub variant: GridVariant,
    /// `planted[j]` is the chosen cell of column `j`.
    pub planted: Option<Vec<Cell>>,
}

fn pair(a: Cell, b: Cell) -> (Cell, Cell) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Pairs a generator may use as edges.
fn allowed_pairs(k: usize, variant: GridVariant) -> Vec<(Cell, Cell)> {
    let cells: Vec<Cell> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for (x, &a) in cells.iter().enumerate() {
        for &b in &cells[x + 1..] {
            if variant == GridVariant::PermutationClique && a.0 == b.0 {
                continue;
            }
            out.push((a, b));
        }
    }
    out
}

impl GridProblemInstance {
    pub fn has_edge(&self, a: Cell, b: Cell) -> bool {
        self.edges.binary_search(&pair(a, b)).is_ok()
    }

    /// Whether `cells` (one per column, indexed by column) solves the instance.
    pub fn is_solution(&self, cells: &[Cell]) -> bool {
        if cells.len() != self.k || cells.iter().enumerate().any(|(j, c)| c.1 != j || c.0 >= self.k) {
            return false;
        }
        if self.variant.is_permutation() {
            let mut rows: Vec<usize> = cells.iter().map(|c| c.0).collect();
            rows.sort_unstable();
            rows.dedup();
            if rows.len() != self.k {
                return false;
            }
        }
        for (x, &a) in cells.iter().enumerate() {
            for &b in &cells[x + 1..] {
                if self.has_edge(a, b) != self.variant.is_clique() {
                    return false;
                }
            }
        }
        true
    }

    /// Structural invariants: cells in range, no self-pairs, sorted unique
    /// edges, no same-row edges for permutation-clique, valid planted set.
    pub fn check(&self) -> Result<(), GadgetError> {
        let bad = |msg: String| Err(GadgetError::InvalidGrid(msg));
        for &(a, b) in &self.edges {
            if a >= b {
                return bad(format!("edge {a:?}-{b:?} is a self-pair or unordered"));
            }
            if a.0 >= self.k || a.1 >= self.k || b.0 >= self.k || b.1 >= self.k {
                return bad(format!("edge {a:?}-{b:?} leaves the grid"));
            }
            if self.variant == GridVariant::PermutationClique && a.0 == b.0 {
                return bad(format!("edge {a:?}-{b:?} lies inside a row"));
            }
        }
        if self.edges.windows(2).any(|w| w[0] >= w[1]) {
            return bad("edges are not sorted and unique".into());
        }
        if let Some(p) = &self.planted {
            if !self.is_solution(p) {
                return bad("planted cells do not form a solution".into());
            }
        }
        Ok(())
    }

    /// Some solution, found by trying every row choice per column.
    pub fn solve(&self) -> Option<Vec<Cell>> {
        let k = self.k;
        let mut rows = vec![0usize; k];
        loop {
            let cells: Vec<Cell> = rows.iter().enumerate().map(|(j, &i)| (i, j)).collect();
            if self.is_solution(&cells) {
                return Some(cells);
            }
            let mut j = 0;
            while j < k && rows[j] == k - 1 {
                rows[j] = 0;
                j += 1;
            }
            if j == k {
                return None;
            }
            rows[j] += 1;
        }
    }
}

/// Random instance with `edge_count` edges. With `plant`, a random solution
/// is fixed first: for independent-set variants no edge joins two planted
/// cells, for clique variants all planted pairs are edges.
pub fn gen_grid_instance(
    k: usize,
    edge_count: usize,
    variant: GridVariant,
    seed: u64,
    plant: bool,
) -> Result<GridProblemInstance, GadgetError> {
    if k < 2 {
        return Err(GadgetError::Unsatisfiable(format!("k = {k} is below 2")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool = allowed_pairs(k, variant);
    let mut edges = Vec::new();
    let planted = if plant {
        let mut rows: Vec<usize> = (0..k).collect();
        if variant.is_permutation() {
            rows.shuffle(&mut rng);
        } else {
            let choices: Vec<usize> = (0..k).collect();
            for r in rows.iter_mut() {
                *r = *choices.choose(&mut rng).expect("k >= 2");
            }
        }
        let cells: Vec<Cell> = rows.iter().enumerate().map(|(j, &i)| (i, j)).collect();
        let inside = |&(a, b): &(Cell, Cell)| cells.contains(&a) && cells.contains(&b);
        if variant.is_clique() {
            edges.extend(pool.iter().copied().filter(inside));
        }
        pool.retain(|p| !inside(p));
        Some(cells)
    } else {
        None
    };
    if edge_count < edges.len() || edge_count - edges.len() > pool.len() {
        return Err(GadgetError::Unsatisfiable(format!(
            "{edge_count} edges requested, between {} and {} possible",
            edges.len(),
            edges.len() + pool.len()
        )));
    }
    pool.shuffle(&mut rng);
    let extra = edge_count - edges.len();
    edges.extend(pool.into_iter().take(extra));
    edges.sort_unstable();
    let out = GridProblemInstance {
        k,
        edges,
        variant,
        planted,
    };
    out.check()?;
    Ok(out)
}

/// Every instance on the `k × k` grid with between 1 and `max_edges` edges.
pub fn all_grid_instances(k: usize, max_edges: usize, variant: GridVariant) -> Vec<GridProblemInstance> {
    let pool = allowed_pairs(k, variant);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        pool: &[(Cell, Cell)],
        start: usize,
        left: usize,
        chosen: &mut Vec<(Cell, Cell)>,
        emit: &mut dyn FnMut(&[(Cell, Cell)]),
    ) {
        if !chosen.is_empty() {
            emit(chosen);
        }
        if left == 0 {
            return;
        }
        for i in start..pool.len() {
            chosen.push(pool[i]);
            rec(pool, i + 1, left - 1, chosen, emit);
            chosen.pop();
        }
    }
    rec(&pool, 0, max_edges, &mut chosen, &mut |edges| {
        let mut h = GridProblemInstance {
            k,
            edges: edges.to_vec(),
            variant,
            planted: None,
        };
        h.planted = h.solve();
        out.push(h);
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planted_independent_set_without_edges() {
        let h = gen_grid_instance(3, 0, GridVariant::IndependentSet, 1, true).unwrap();
        assert!(h.edges.is_empty());
        assert!(h.is_solution(h.planted.as_ref().unwrap()));
    }

    #[test]
    fn planted_cells_stay_independent() {
        for seed in 0..20 {
            let h = gen_grid_instance(3, 5, GridVariant::PermutationIndependentSet, seed, true).unwrap();
            assert_eq!(h.edges.len(), 5);
            let p = h.planted.clone().unwrap();
            for a in &p {
                for b in &p {
                    assert!(!h.has_edge(*a, *b));
                }
            }
        }
    }

    #[test]
    fn planted_permutation_clique() {
        let h = gen_grid_instance(2, 1, GridVariant::PermutationClique, 4, true).unwrap();
        let p = h.planted.clone().unwrap();
        assert_ne!(p[0].0, p[1].0);
        assert!(h.has_edge(p[0], p[1]));
        for s in 0..10 {
            let h = gen_grid_instance(3, 12, GridVariant::PermutationClique, s, true).unwrap();
            assert!(h.edges.iter().all(|(a, b)| a.0 != b.0));
        }
    }

    #[test]
    fn impossible_requests() {
        assert!(gen_grid_instance(2, 7, GridVariant::IndependentSet, 0, false).is_err());
        assert!(gen_grid_instance(1, 0, GridVariant::IndependentSet, 0, false).is_err());
        assert!(gen_grid_instance(3, 1, GridVariant::PermutationClique, 0, true).is_err());
    }

    #[test]
    fn enumeration_counts() {
        // Six cell pairs on the 2 × 2 grid: 6 one-edge and 15 two-edge graphs.
        assert_eq!(all_grid_instances(2, 2, GridVariant::PermutationIndependentSet).len(), 21);
        let solvable = all_grid_instances(2, 1, GridVariant::PermutationIndependentSet)
            .into_iter()
            .filter(|h| h.planted.is_some())
            .count();
        // A single edge rules out at most one of the two permutations.
        assert_eq!(solvable, 6);
    }
}
