//! Standalone checks of the four gadget families.

use thiserror::Error;

use super::generic::{add_column_selector, add_edge_gadget, add_propagation, add_row_selector, base, base_id};
use super::{Builder, GadgetError, GadgetKind};
use crate::graph::{has_even_cycle, has_s_traversing_cycle, is_s_bipartite, set_of, Problem, VertexId};

/// Column selectors are enumerated only up to this many candidate subsets.
const MAX_SUBSETS: u64 = 5_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GadgetFailure {
    #[error(transparent)]
    Build(#[from] GadgetError),
    #[error("no validity predicate for {0}")]
    Unsupported(Problem),
    #[error("{0} subsets are too many to enumerate")]
    TooLarge(u64),
    /// The legal deletions differ from the `k` intended ones.
    #[error("legal deletions {found:?}, expected {expected:?}")]
    Deletions {
        found: Vec<Vec<VertexId>>,
        expected: Vec<Vec<VertexId>>,
    },
    #[error("{0:?} is not an obstruction")]
    NotObstruction(Vec<VertexId>),
}

/// Whether `keep` induces a graph that is valid for `problem`.
fn valid(problem: Problem, b: &Builder, keep: &[VertexId]) -> Result<bool, GadgetFailure> {
    let n = b.graph.n();
    let keep = set_of(n, keep.iter().copied());
    let s = set_of(n, b.s.iter().copied());
    match problem {
        Problem::Sfvs => Ok(!has_s_traversing_cycle(&b.graph, &keep, &s)),
        Problem::Soct => Ok(is_s_bipartite(&b.graph, &keep, &s)),
        Problem::Ect => Ok(!has_even_cycle(&b.graph, &keep)),
        other => Err(GadgetFailure::Unsupported(other)),
    }
}

fn binomial(n: usize, r: usize) -> u64 {
    (0..r as u64).fold(1u64, |acc, i| acc.saturating_mul(n as u64 - i) / (i + 1))
}

/// Calls `f` on every `r`-subset of `items` in lexicographic order.
fn for_each_subset(items: &[VertexId], r: usize, f: &mut dyn FnMut(&[VertexId]) -> Result<(), GadgetFailure>) -> Result<(), GadgetFailure> {
    let n = items.len();
    if r > n {
        return Ok(());
    }
    let mut idx: Vec<usize> = (0..r).collect();
    let mut chosen = vec![0; r];
    loop {
        for (c, &i) in chosen.iter_mut().zip(&idx) {
            *c = items[i];
        }
        f(&chosen)?;
        let Some(pos) = (0..r).rev().find(|&p| idx[p] != p + n - r) else {
            return Ok(());
        };
        idx[pos] += 1;
        for q in pos + 1..r {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// A standalone column selector on column 0: the column vertices followed by
/// the gadget vertices.
fn column(k: usize, variant: u8) -> Result<(Builder, Vec<VertexId>), GadgetError> {
    let mut b = base(k, 1);
    let mut group: Vec<VertexId> = (0..k).flat_map(|i| [base_id(k, 0, i, 0, 0), base_id(k, 0, i, 0, 1)]).collect();
    group.extend(add_column_selector(&mut b, k, 0, 0, variant)?);
    Ok((b, group))
}

/// Every `(2k-2)`-subset of a standalone column selector whose deletion
/// leaves a graph valid for `problem`, each sorted.
pub fn legal_column_deletions(variant: u8, k: usize, problem: Problem) -> Result<Vec<Vec<VertexId>>, GadgetFailure> {
    let (b, group) = column(k, variant)?;
    let r = 2 * k - 2;
    let count = binomial(group.len(), r);
    if count > MAX_SUBSETS {
        return Err(GadgetFailure::TooLarge(count));
    }
    valid(problem, &b, &[])?;
    let mut legal = Vec::new();
    let mut keep = Vec::with_capacity(group.len());
    for_each_subset(&group, r, &mut |del| {
        keep.clear();
        keep.extend(group.iter().copied().filter(|v| !del.contains(v)));
        if valid(problem, &b, &keep)? {
            legal.push(del.to_vec());
        }
        Ok(())
    })?;
    Ok(legal)
}

/// The vertex sets that must be obstructions, together with the graph they
/// live in. Column selectors have none.
pub(crate) fn gadget_obstructions(kind: GadgetKind, variant: u8, k: usize) -> Result<(Builder, Vec<Vec<VertexId>>), GadgetError> {
    let mut out = Vec::new();
    let b = match kind {
        GadgetKind::ColumnSelector => column(k, variant)?.0,
        GadgetKind::RowSelector => {
            let mut b = base(k, 1);
            let sel = add_row_selector(&mut b, k, 0, 0, variant)?;
            for j in 0..k {
                for j2 in j + 1..k {
                    let mut set = sel.clone();
                    set.extend([base_id(k, 0, 0, j, 0), base_id(k, 0, 0, j2, 0)]);
                    out.push(set);
                }
            }
            b
        }
        GadgetKind::Edge => {
            // One gadget per pair of distinct cells, each on its own copy.
            let cells: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
            let pairs: Vec<_> = cells
                .iter()
                .enumerate()
                .flat_map(|(x, &a)| cells[x + 1..].iter().map(move |&c| (a, c)))
                .collect();
            let mut b = base(k, pairs.len());
            for (p, &(a, c)) in pairs.iter().enumerate() {
                let mut set = add_edge_gadget(&mut b, k, p, a, c, variant)?;
                set.extend([base_id(k, p, a.0, a.1, 0), base_id(k, p, c.0, c.1, 0)]);
                out.push(set);
            }
            b
        }
        GadgetKind::Propagation => {
            let mut b = base(k, 2);
            let (interface, pendants) = add_propagation(&mut b, k, 0, variant)?;
            let mut gadget = interface;
            gadget.extend(pendants.iter().map(|&(w, _)| w));
            for i in 0..k {
                for j in 0..k {
                    for j2 in 0..k {
                        if j != j2 {
                            let mut set = gadget.clone();
                            set.extend([base_id(k, 0, i, j, 1), base_id(k, 1, i, j2, 0)]);
                            out.push(set);
                        }
                    }
                }
            }
            b
        }
    };
    Ok((b, out))
}

/// Checks one gadget family against `problem`. Column selectors must admit
/// exactly the `k` intended `(2k-2)`-deletions; the other families must
/// contain an obstruction for every bad choice they are meant to rule out.
pub fn verify_gadget(kind: GadgetKind, variant: u8, k: usize, problem: Problem) -> Result<(), GadgetFailure> {
    if kind == GadgetKind::ColumnSelector {
        let found = legal_column_deletions(variant, k, problem)?;
        let expected: Vec<Vec<VertexId>> = (0..k)
            .map(|keep| {
                let mut del: Vec<VertexId> = (0..k)
                    .filter(|&i| i != keep)
                    .flat_map(|i| [base_id(k, 0, i, 0, 0), base_id(k, 0, i, 0, 1)])
                    .collect();
                del.sort_unstable();
                del
            })
            .collect();
        let mut sorted = found.clone();
        sorted.sort();
        let mut want = expected.clone();
        want.sort();
        return if sorted == want {
            Ok(())
        } else {
            Err(GadgetFailure::Deletions { found, expected })
        };
    }
    let (b, sets) = gadget_obstructions(kind, variant, k)?;
    valid(problem, &b, &[])?;
    for set in sets {
        if valid(problem, &b, &set)? {
            return Err(GadgetFailure::NotObstruction(set));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::wiring;

    const KINDS: [GadgetKind; 4] = [
        GadgetKind::ColumnSelector,
        GadgetKind::RowSelector,
        GadgetKind::Edge,
        GadgetKind::Propagation,
    ];

    #[test]
    fn wired_gadgets_pass() {
        for problem in [Problem::Sfvs, Problem::Soct, Problem::Ect] {
            let w = wiring(problem).unwrap();
            for (kind, variant) in KINDS.into_iter().zip(w) {
                for k in 2..=3 {
                    assert_eq!(verify_gadget(kind, variant, k, problem), Ok(()), "{kind:?} {variant} {problem} k={k}");
                }
            }
        }
    }

    #[test]
    fn smallest_column_selector_has_two_legal_deletions() {
        // Four column vertices and six gadget vertices.
        let legal = legal_column_deletions(1, 2, Problem::Sfvs).unwrap();
        assert_eq!(legal.len(), 2);
    }

    #[test]
    fn mismatched_gadgets_fail() {
        // The plain column selector leaves odd cycles only, so it cannot
        // force anything for even cycles.
        assert!(verify_gadget(GadgetKind::ColumnSelector, 1, 2, Problem::Ect).is_err());
        // Without the subdivision the propagation cycle is even.
        assert!(matches!(
            verify_gadget(GadgetKind::Propagation, 1, 2, Problem::Soct),
            Err(GadgetFailure::NotObstruction(_))
        ));
        // The row selector triangle avoids S.
        assert!(verify_gadget(GadgetKind::RowSelector, 1, 2, Problem::Soct).is_err());
        assert!(verify_gadget(GadgetKind::Edge, 1, 2, Problem::Ect).is_err());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            verify_gadget(GadgetKind::RowSelector, 3, 2, Problem::Sfvs),
            Err(GadgetFailure::Build(GadgetError::NoSuchVariant { .. }))
        ));
        assert_eq!(
            verify_gadget(GadgetKind::Edge, 1, 2, Problem::Nmc),
            Err(GadgetFailure::Unsupported(Problem::Nmc))
        );
        assert!(matches!(
            legal_column_deletions(2, 6, Problem::Ect),
            Err(GadgetFailure::TooLarge(_))
        ));
    }

    #[test]
    fn gadget_neighbourhoods_stay_in_their_attachment_sets() {
        let k = 3;
        for variant in 1..=2 {
            let (b, group) = column(k, variant).unwrap();
            for &v in &group[2 * k..] {
                assert!(b.graph.neighbors(v).iter().all(|u| group.contains(u)));
            }
        }
        for variant in 1..=2 {
            let mut b = base(k, 1);
            let sel = add_row_selector(&mut b, k, 0, 1, variant).unwrap();
            for &v in &sel {
                for &u in b.graph.neighbors(v) {
                    assert!(sel.contains(&u) || (0..k).any(|j| u == base_id(k, 0, 1, j, 0) || u == base_id(k, 0, 1, j, 1)));
                }
            }
        }
        for variant in 1..=3 {
            let mut b = base(k, 2);
            let (interface, pendants) = add_propagation(&mut b, k, 0, variant).unwrap();
            let grid = 2 * k * k * 2;
            for &(w, v) in &pendants {
                let on_grid: Vec<_> = b.graph.neighbors(w).iter().filter(|&&u| u < grid).collect();
                assert_eq!(on_grid, vec![&v]);
            }
            for &v in &interface {
                assert!(b.graph.neighbors(v).iter().all(|&u| u < grid || interface.contains(&u) || pendants.iter().any(|p| p.0 == u)));
            }
        }
    }
}
