//! Reductions from Node Multiway Cut, Restricted Edge-Subset Feedback Edge
//! Set and Multiway Cut to weighted Subset FVS, with pull-back of solutions
//! and transfer of tree decompositions.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::dp::{solve_with, DpError, DpStats, Mode, SolveOptions};
use crate::graph::{Edge, Graph, LabeledInstance, Problem, VertexId, VertexSet};
use crate::oracle::Deletion;
use crate::td::{heuristic_td, nicify, validate_td, TdError, TreeDecomposition};

/// What a vertex of a reduced instance stands for in the source instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Vertex(VertexId),
    Subdivision(Edge),
    Apex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub source: Problem,
    /// Indexed by vertex of the reduced instance.
    pub origin: Vec<Origin>,
}

impl ReductionTrace {
    /// Maps a deletion set of the reduced instance to the source vocabulary.
    pub fn pull_back(&self, deleted: &VertexSet) -> Deletion {
        match self.source {
            Problem::Resfes | Problem::Mwc => Deletion::Edges(
                deleted
                    .ones()
                    .filter_map(|v| match self.origin[v] {
                        Origin::Subdivision(e) => Some(e),
                        _ => None,
                    })
                    .collect(),
            ),
            _ => Deletion::Vertices(
                deleted
                    .ones()
                    .filter_map(|v| match self.origin[v] {
                        Origin::Vertex(u) => Some(u),
                        _ => None,
                    })
                    .collect(),
            ),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("expected a {expected} instance, got {got}")]
    WrongProblem { expected: &'static str, got: Problem },
    #[error(transparent)]
    Decomposition(#[from] TdError),
    #[error(transparent)]
    Solve(#[from] DpError),
}

fn expect(instance: &LabeledInstance, ok: &[Problem], expected: &'static str) -> Result<(), ReductionError> {
    if ok.contains(&instance.problem) {
        Ok(())
    } else {
        Err(ReductionError::WrongProblem {
            expected,
            got: instance.problem,
        })
    }
}

/// Adds an apex adjacent to every terminal; the apex is the only S-vertex
/// and apex and terminals become undeletable.
pub fn nmc_to_wsfvs(instance: &LabeledInstance) -> (LabeledInstance, ReductionTrace) {
    let n = instance.n();
    let mut g = instance.graph.clone();
    let apex = g.add_vertex();
    for t in instance.terminals.ones() {
        g.add_edge(apex, t).expect("apex edges are new");
    }
    let mut weights = instance.weights.clone();
    weights.push(0);
    let mut out = LabeledInstance::new(g, Problem::Sfvs)
        .with_weights(weights)
        .with_s([apex])
        .with_budget(instance.budget);
    out.forced_keep.insert(apex);
    for v in instance.terminals.ones().chain(instance.forced_keep.ones()) {
        out.forced_keep.insert(v);
    }
    let mut origin: Vec<Origin> = (0..n).map(Origin::Vertex).collect();
    origin.push(Origin::Apex);
    (
        out,
        ReductionTrace {
            source: Problem::Nmc,
            origin,
        },
    )
}

/// Subdivides every edge. Subdivision vertices of S-edges form the new `S`;
/// they and all original vertices are undeletable, and the subdivision
/// vertex of any other edge inherits the edge's weight.
pub fn resfes_to_wsfvs(instance: &LabeledInstance) -> (LabeledInstance, ReductionTrace) {
    let (out, mut trace) = subdivide(instance, &instance.s_edges.iter().copied().collect::<Vec<_>>());
    trace.source = Problem::Resfes;
    (out, trace)
}

fn subdivide(instance: &LabeledInstance, s_edges: &[Edge]) -> (LabeledInstance, ReductionTrace) {
    let n = instance.n();
    let edges: Vec<Edge> = instance.graph.edges().collect();
    let mut g = Graph::new(n + edges.len());
    let mut weights = vec![0u64; n + edges.len()];
    let mut origin: Vec<Origin> = (0..n).map(Origin::Vertex).collect();
    for (i, &(u, v)) in edges.iter().enumerate() {
        let x = n + i;
        g.add_edge(u, x).expect("subdivision edges are new");
        g.add_edge(x, v).expect("subdivision edges are new");
        weights[x] = instance.edge_weight(u, v);
        origin.push(Origin::Subdivision((u, v)));
    }
    let mut out = LabeledInstance::new(g, Problem::Sfvs)
        .with_weights(weights)
        .with_budget(instance.budget);
    out.forced_keep.insert_range(..n);
    for e in s_edges {
        let i = edges.binary_search(e).expect("S-edge is an edge");
        out.s_vertices.insert(n + i);
        out.forced_keep.insert(n + i);
        out.weights[n + i] = 0;
    }
    (
        out,
        ReductionTrace {
            source: Problem::Resfes,
            origin,
        },
    )
}

/// Adds an apex adjacent to every terminal, makes the apex edges the
/// undeletable S-edges of a RESFES instance, and subdivides.
pub fn mwc_to_wsfvs(instance: &LabeledInstance) -> (LabeledInstance, ReductionTrace) {
    let n = instance.n();
    let mut mid = instance.clone();
    let apex = mid.graph.add_vertex();
    mid.weights.push(0);
    let mut apex_edges = Vec::new();
    for t in instance.terminals.ones() {
        mid.graph.add_edge(t, apex).expect("apex edges are new");
        apex_edges.push((t, apex));
    }
    let (out, mut trace) = subdivide(&mid, &apex_edges);
    trace.source = Problem::Mwc;
    trace.origin[n] = Origin::Apex;
    for o in trace.origin.iter_mut() {
        if matches!(o, Origin::Subdivision((_, b)) if *b == apex) {
            *o = Origin::Apex;
        }
    }
    (out, trace)
}

/// Adds `apex` to every bag (a single bag if there are none).
pub fn add_apex_to_td(td: &TreeDecomposition, apex: VertexId) -> TreeDecomposition {
    let mut out = td.clone();
    out.n_vertices = td.n_vertices.max(apex + 1);
    if out.bags.is_empty() {
        out.bags.push(vec![apex]);
    }
    for bag in &mut out.bags {
        bag.push(apex);
        bag.sort_unstable();
    }
    out
}

/// Transfers a decomposition of `G` to its subdivision `sub` (original
/// vertices first, subdivision vertex of the `i`-th edge numbered `n + i`):
/// every edge gets a leaf bag `{u, v, x_uv}` hanging off a bag covering it.
/// Decompositions of width below 2 are recomputed instead, since those
/// leaves would widen them.
pub fn subdivide_td(graph: &Graph, td: &TreeDecomposition, sub: &Graph) -> TreeDecomposition {
    if td.width() < 2 {
        return heuristic_td(sub);
    }
    let n = graph.n();
    let mut out = td.clone();
    out.n_vertices = sub.n();
    let mut cover: BTreeMap<Edge, usize> = BTreeMap::new();
    for (b, bag) in td.bags.iter().enumerate() {
        for (i, &u) in bag.iter().enumerate() {
            for &v in &bag[i + 1..] {
                cover.entry((u, v)).or_insert(b);
            }
        }
    }
    for (i, e) in graph.edges().enumerate() {
        let b = cover[&e];
        out.bags.push(vec![e.0, e.1, n + i]);
        out.edges.push((b, out.bags.len() - 1));
    }
    out
}

/// Outcome of solving a source problem through its reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedSolution {
    pub problem: Problem,
    pub optimum_weight: u64,
    pub deletion: Deletion,
    pub feasible_within_budget: bool,
    pub width: usize,
    pub stats: DpStats,
}

/// Reduces, transfers `td` (or a heuristic decomposition of the source),
/// solves weighted SFVS, and pulls the solution back.
pub fn solve_via_reduction(
    instance: &LabeledInstance,
    td: Option<&TreeDecomposition>,
    options: &SolveOptions,
) -> Result<ReducedSolution, ReductionError> {
    expect(instance, &[Problem::Nmc, Problem::Resfes, Problem::Mwc], "nmc, resfes or mwc")?;
    let source_td = match td {
        Some(td) => {
            validate_td(&instance.graph, td).map_err(TdError::Invalid)?;
            td.clone()
        }
        None => heuristic_td(&instance.graph),
    };
    let (reduced, trace, reduced_td) = match instance.problem {
        Problem::Nmc => {
            let (r, t) = nmc_to_wsfvs(instance);
            let d = add_apex_to_td(&source_td, instance.n());
            (r, t, d)
        }
        Problem::Resfes => {
            let (r, t) = resfes_to_wsfvs(instance);
            let d = subdivide_td(&instance.graph, &source_td, &r.graph);
            (r, t, d)
        }
        _ => {
            let (r, t) = mwc_to_wsfvs(instance);
            let mut with_apex = instance.graph.clone();
            let apex = with_apex.add_vertex();
            for v in instance.terminals.ones() {
                with_apex.add_edge(v, apex).expect("apex edges are new");
            }
            let apex_td = add_apex_to_td(&source_td, apex);
            let d = subdivide_td(&with_apex, &apex_td, &r.graph);
            (r, t, d)
        }
    };
    let nice = nicify(&reduced_td, &reduced.graph)?;
    let sol = solve_with(&reduced, &nice, Mode::Sfvs, options)?;
    Ok(ReducedSolution {
        problem: instance.problem,
        optimum_weight: sol.deletion_weight,
        deletion: trace.pull_back(&sol.deletion_set),
        feasible_within_budget: sol.deletion_weight <= instance.budget,
        width: nice.width(),
        stats: sol.stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{cycle, path};
    use crate::oracle::{brute_solve, edge_deletion_ok, vertex_deletion_ok};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn solve(i: &LabeledInstance) -> Result<ReducedSolution, ReductionError> {
        solve_via_reduction(i, None, &SolveOptions::default())
    }

    #[test]
    fn nmc_path() {
        let i = LabeledInstance::new(path(3), Problem::Nmc)
            .with_terminals([0, 2])
            .with_budget(1);
        let (r, _) = nmc_to_wsfvs(&i);
        assert_eq!(r.n(), 4);
        assert_eq!(brute_solve(&r).unwrap().optimum_weight, 1);
        let s = solve(&i).unwrap();
        assert_eq!(s.optimum_weight, 1);
        assert_eq!(s.deletion, Deletion::Vertices(vec![1]));
        assert!(s.feasible_within_budget);
    }

    #[test]
    fn nmc_adjacent_terminals() {
        let i = LabeledInstance::new(path(2), Problem::Nmc).with_terminals([0, 1]);
        assert_eq!(solve(&i), Err(ReductionError::Solve(DpError::Infeasible)));
    }

    #[test]
    fn nmc_edgeless() {
        let i = LabeledInstance::new(Graph::new(3), Problem::Nmc).with_terminals([0, 1, 2]);
        assert_eq!(solve(&i).unwrap().optimum_weight, 0);
    }

    #[test]
    fn resfes_examples() {
        let mut tri = LabeledInstance::new(cycle(3), Problem::Resfes);
        tri.s_edges.insert((0, 1));
        let (r, _) = resfes_to_wsfvs(&tri);
        assert_eq!(r.n(), 6);
        assert_eq!(brute_solve(&r).unwrap().optimum_weight, 1);
        let s = solve(&tri).unwrap();
        assert_eq!(s.optimum_weight, 1);
        assert!(matches!(&s.deletion, Deletion::Edges(e) if e.len() == 1 && e[0] != (0, 1)));
        let plain = LabeledInstance::new(cycle(4), Problem::Resfes);
        assert_eq!(solve(&plain).unwrap().optimum_weight, 0);
        let mut tree = LabeledInstance::new(path(5), Problem::Resfes);
        tree.s_edges.insert((1, 2));
        assert_eq!(solve(&tree).unwrap().optimum_weight, 0);
        let mut tight = tri.clone();
        tight.budget = 0;
        assert!(!solve(&tight).unwrap().feasible_within_budget);
    }

    #[test]
    fn mwc_examples() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let i = LabeledInstance::new(star, Problem::Mwc).with_terminals([1, 2, 3]);
        assert_eq!(solve(&i).unwrap().optimum_weight, 2);
        let edge = LabeledInstance::new(path(2), Problem::Mwc).with_terminals([0, 1]);
        assert_eq!(solve(&edge).unwrap().optimum_weight, 1);
        let apart = LabeledInstance::new(Graph::new(2), Problem::Mwc).with_terminals([0, 1]);
        assert_eq!(solve(&apart).unwrap().optimum_weight, 0);
        let tri = LabeledInstance::new(cycle(3), Problem::Mwc)
            .with_terminals([0, 1, 2])
            .with_budget(2);
        let s = solve(&tri).unwrap();
        assert_eq!(s.optimum_weight, 3);
        assert!(!s.feasible_within_budget);
    }

    #[test]
    fn wrong_problem_is_rejected() {
        let i = LabeledInstance::new(path(2), Problem::Soct);
        assert!(matches!(solve(&i), Err(ReductionError::WrongProblem { .. })));
    }

    #[test]
    fn transferred_decompositions_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let n = rng.gen_range(2..=9);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let td = heuristic_td(&g);
            let base = LabeledInstance::new(g.clone(), Problem::Nmc).with_terminals([0, 1]);
            let (r, _) = nmc_to_wsfvs(&base);
            let apex_td = add_apex_to_td(&td, n);
            assert!(validate_td(&r.graph, &apex_td).is_ok());
            assert!(apex_td.width() <= td.width() + 1);
            let (r, _) = resfes_to_wsfvs(&LabeledInstance::new(g.clone(), Problem::Resfes));
            let sub_td = subdivide_td(&g, &td, &r.graph);
            assert!(validate_td(&r.graph, &sub_td).is_ok());
            if td.width() >= 2 {
                assert_eq!(sub_td.width(), td.width());
            } else {
                assert!(sub_td.width() <= 1);
            }
        }
    }

    #[test]
    fn matches_brute_force_and_pulls_back_cleanly() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for round in 0..90 {
            let problem = [Problem::Nmc, Problem::Resfes, Problem::Mwc][round % 3];
            let n = rng.gen_range(2..=7);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let mut i = LabeledInstance::new(g, problem);
            let edges: Vec<Edge> = i.graph.edges().collect();
            match problem {
                Problem::Resfes => {
                    for _ in 0..3.min(edges.len()) {
                        i.s_edges.insert(edges[rng.gen_range(0..edges.len())]);
                    }
                    for e in &edges {
                        i.edge_weights.insert(*e, rng.gen_range(1..=3));
                    }
                }
                _ => {
                    let t: Vec<VertexId> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
                    i = i.with_terminals(t);
                    i.weights = (0..n).map(|_| rng.gen_range(1..=3)).collect();
                }
            }
            let expected = brute_solve(&i).ok().map(|r| r.optimum_weight);
            let got = solve(&i);
            assert_eq!(expected, got.as_ref().ok().map(|s| s.optimum_weight), "{problem:?}");
            if let Ok(s) = got {
                match &s.deletion {
                    Deletion::Vertices(v) => {
                        assert!(v.iter().all(|&x| !i.terminals.contains(x)));
                        let set = crate::graph::set_of(n, v.iter().copied());
                        assert!(vertex_deletion_ok(&i, &set));
                    }
                    Deletion::Edges(e) => {
                        assert!(e.iter().all(|x| !i.s_edges.contains(x)));
                        assert!(edge_deletion_ok(&i, &e.iter().copied().collect()));
                    }
                }
            }
        }
    }
}
