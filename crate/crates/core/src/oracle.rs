//! Exhaustive and branching reference solvers, used as ground truth for the
//! dynamic program, the reductions and the lower-bound generators.

use std::collections::{BTreeSet, VecDeque};

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::dp::{signature, Mode};
use crate::graph::{
    edge_key, has_even_cycle, has_s_traversing_cycle, is_s_bipartite, Edge, Graph,
    LabeledInstance, Problem, UnionFind, VertexId, VertexSet,
};

/// Size guards for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Give up on deletion sets heavier than this.
    pub weight_cap: Option<u64>,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: 14,
            max_edges: 18,
            weight_cap: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Deletion {
    Vertices(Vec<VertexId>),
    Edges(Vec<Edge>),
}

impl Deletion {
    pub fn len(&self) -> usize {
        match self {
            Deletion::Vertices(v) => v.len(),
            Deletion::Edges(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub optimum_weight: u64,
    /// The first optimal set in enumeration order.
    pub deletion: Deletion,
    /// Number of optimal deletion sets.
    pub optimal_count: u64,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance too large for enumeration: {items} items, limit {limit}")]
    TooLarge { items: usize, limit: usize },
    #[error("no feasible deletion set exists")]
    Infeasible,
    #[error("no feasible deletion set of weight at most {0}")]
    NoneWithinCap(u64),
    #[error("{0} is not supported by this oracle")]
    Unsupported(Problem),
}

/// Vertices a solution may delete.
pub fn deletable_vertices(instance: &LabeledInstance) -> Vec<VertexId> {
    (0..instance.n())
        .filter(|&v| {
            !instance.forced_keep.contains(v)
                && !(instance.problem == Problem::Nmc && instance.terminals.contains(v))
        })
        .collect()
}

/// Edges a solution may delete.
pub fn deletable_edges(instance: &LabeledInstance) -> Vec<Edge> {
    instance
        .graph
        .edges()
        .filter(|e| instance.problem != Problem::Resfes || !instance.s_edges.contains(e))
        .collect()
}

fn terminals_separated(graph: &Graph, kept: Option<&VertexSet>, removed: &BTreeSet<Edge>, t: &VertexSet) -> bool {
    let mut uf = UnionFind::new(graph.n());
    for (u, v) in graph.edges() {
        if kept.is_none_or(|k| k.contains(u) && k.contains(v)) && !removed.contains(&(u, v)) {
            uf.union(u, v);
        }
    }
    let mut roots = BTreeSet::new();
    t.ones()
        .filter(|&v| kept.is_none_or(|k| k.contains(v)))
        .all(|v| roots.insert(uf.find(v)))
}

/// Whether deleting `deleted` solves the vertex-deletion problem. Forced
/// vertices (and terminals for NMC) must survive.
pub fn vertex_deletion_ok(instance: &LabeledInstance, deleted: &VertexSet) -> bool {
    if deleted.ones().any(|v| instance.forced_keep.contains(v)) {
        return false;
    }
    let mut kept = deleted.clone();
    kept.grow(instance.n());
    kept.toggle_range(..);
    let g = &instance.graph;
    match instance.problem {
        Problem::Sfvs => !has_s_traversing_cycle(g, &kept, &instance.s_vertices),
        Problem::Soct => is_s_bipartite(g, &kept, &instance.s_vertices),
        Problem::Ect => !has_even_cycle(g, &kept),
        Problem::Nmc => {
            instance.terminals.is_subset(&kept)
                && terminals_separated(g, Some(&kept), &BTreeSet::new(), &instance.terminals)
        }
        Problem::Mwc | Problem::Resfes => false,
    }
}

/// Whether deleting the edge set `removed` solves the edge-deletion problem.
pub fn edge_deletion_ok(instance: &LabeledInstance, removed: &BTreeSet<Edge>) -> bool {
    if removed.iter().any(|&(u, v)| !instance.graph.has_edge(u, v)) {
        return false;
    }
    match instance.problem {
        Problem::Mwc => terminals_separated(&instance.graph, None, removed, &instance.terminals),
        Problem::Resfes => {
            if removed.iter().any(|e| instance.s_edges.contains(e)) {
                return false;
            }
            // An S-edge lies on a cycle iff its ends stay connected without it.
            instance.s_edges.iter().all(|&s| {
                let mut uf = UnionFind::new(instance.n());
                for e in instance.graph.edges() {
                    if e != s && !removed.contains(&e) {
                        uf.union(e.0, e.1);
                    }
                }
                uf.find(s.0) != uf.find(s.1)
            })
        }
        _ => false,
    }
}

/// Exhaustive search with the default guards.
pub fn brute_solve(instance: &LabeledInstance) -> Result<OracleResult, OracleError> {
    brute_solve_with(instance, &OracleLimits::default())
}

/// Enumerates deletion sets by increasing cardinality, lexicographically
/// within a cardinality, skipping sets heavier than the best found so far.
pub fn brute_solve_with(
    instance: &LabeledInstance,
    limits: &OracleLimits,
) -> Result<OracleResult, OracleError> {
    if instance.problem.deletes_edges() {
        let m = instance.graph.edge_count();
        if m > limits.max_edges {
            return Err(OracleError::TooLarge {
                items: m,
                limit: limits.max_edges,
            });
        }
        let items = deletable_edges(instance);
        let weights: Vec<u64> = items.iter().map(|&(u, v)| instance.edge_weight(u, v)).collect();
        let (w, set, count) = enumerate(&weights, limits.weight_cap, |chosen| {
            let removed: BTreeSet<Edge> = chosen.iter().map(|&i| items[i]).collect();
            edge_deletion_ok(instance, &removed)
        })
        .ok_or_else(|| none_error(limits))?;
        Ok(OracleResult {
            optimum_weight: w,
            deletion: Deletion::Edges(set.into_iter().map(|i| items[i]).collect()),
            optimal_count: count,
        })
    } else {
        if instance.n() > limits.max_vertices {
            return Err(OracleError::TooLarge {
                items: instance.n(),
                limit: limits.max_vertices,
            });
        }
        let items = deletable_vertices(instance);
        let weights: Vec<u64> = items.iter().map(|&v| instance.weights[v]).collect();
        let mut deleted = FixedBitSet::with_capacity(instance.n());
        let (w, set, count) = enumerate(&weights, limits.weight_cap, |chosen| {
            deleted.clear();
            for &i in chosen {
                deleted.insert(items[i]);
            }
            vertex_deletion_ok(instance, &deleted)
        })
        .ok_or_else(|| none_error(limits))?;
        Ok(OracleResult {
            optimum_weight: w,
            deletion: Deletion::Vertices(set.into_iter().map(|i| items[i]).collect()),
            optimal_count: count,
        })
    }
}

fn none_error(limits: &OracleLimits) -> OracleError {
    match limits.weight_cap {
        Some(c) => OracleError::NoneWithinCap(c),
        None => OracleError::Infeasible,
    }
}

/// Returns (optimum, first optimal index set, number of optimal sets).
fn enumerate(
    weights: &[u64],
    cap: Option<u64>,
    mut feasible: impl FnMut(&[usize]) -> bool,
) -> Option<(u64, Vec<usize>, u64)> {
    let d = weights.len();
    let mut sorted = weights.to_vec();
    sorted.sort_unstable();
    let mut best: Option<(u64, Vec<usize>, u64)> = None;
    for c in 0..=d {
        let bound = best.as_ref().map(|b| b.0).or(cap);
        let lightest: u64 = sorted[..c].iter().sum();
        if bound.is_some_and(|b| lightest > b) {
            break;
        }
        let mut idx: Vec<usize> = (0..c).collect();
        loop {
            let w: u64 = idx.iter().map(|&i| weights[i]).sum();
            let bound = best.as_ref().map(|b| b.0).or(cap);
            if bound.is_none_or(|b| w <= b) && feasible(&idx) {
                match &mut best {
                    Some(b) if b.0 == w => b.2 += 1,
                    Some(b) if b.0 < w => {}
                    _ => best = Some((w, idx.clone(), 1)),
                }
            }
            // Next combination in lexicographic order.
            let mut i = c;
            while i > 0 && idx[i - 1] == d - c + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..c {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    best
}

/// A short cycle through `S` in `G[kept]`, as a vertex list.
fn short_s_cycle(graph: &Graph, kept: &VertexSet, s: &VertexSet) -> Option<Vec<VertexId>> {
    let n = graph.n();
    let mut best: Option<Vec<VertexId>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut branch = vec![usize::MAX; n];
    for src in s.ones().filter(|&v| kept.contains(v)) {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[src] = 0;
        let mut order = vec![src];
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in graph.neighbors(v) {
                if kept.contains(w) && dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    branch[w] = if v == src { w } else { branch[v] };
                    order.push(w);
                }
            }
        }
        for &u in &order[1..] {
            for &w in graph.neighbors(u) {
                if w == src || !kept.contains(w) || dist[w] == usize::MAX || branch[w] == branch[u] || u > w {
                    continue;
                }
                let len = dist[u] + dist[w] + 1;
                if best.as_ref().is_some_and(|b| b.len() <= len) {
                    continue;
                }
                let mut cyc = Vec::with_capacity(len);
                let mut x = u;
                while x != src {
                    cyc.push(x);
                    x = parent[x];
                }
                cyc.push(src);
                let mut x = w;
                while x != src {
                    cyc.push(x);
                    x = parent[x];
                }
                best = Some(cyc);
            }
        }
    }
    best
}

/// A shortest path between two distinct terminals of `G[kept]`; returns its
/// internal vertices.
fn short_terminal_path(graph: &Graph, kept: &VertexSet, t: &VertexSet) -> Option<Vec<VertexId>> {
    let n = graph.n();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut source = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for v in t.ones().filter(|&v| kept.contains(v)) {
        dist[v] = 0;
        source[v] = v;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        for &w in graph.neighbors(v) {
            if kept.contains(w) && dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                source[w] = source[v];
                queue.push_back(w);
            }
        }
    }
    let mut best: Option<(usize, VertexId, VertexId)> = None;
    for (u, w) in graph.edges() {
        if dist[u] == usize::MAX || dist[w] == usize::MAX || source[u] == source[w] {
            continue;
        }
        let len = dist[u] + dist[w];
        if best.is_none_or(|b| len < b.0) {
            best = Some((len, u, w));
        }
    }
    let (_, u, w) = best?;
    let mut inner = Vec::new();
    for mut x in [u, w] {
        while dist[x] > 0 {
            inner.push(x);
            x = parent[x];
        }
    }
    Some(inner)
}

/// Exact minimum-weight deletion of weight at most `budget` for SFVS and
/// NMC, by branching on the vertices of a short obstruction (an S-cycle or a
/// terminal path). Branch `i` deletes the `i`-th obstruction vertex and
/// protects the earlier ones, so every deletion set is explored once.
/// Returns `Ok(None)` if no such deletion exists.
pub fn branch_solve(
    instance: &LabeledInstance,
    budget: u64,
) -> Result<Option<OracleResult>, OracleError> {
    if !matches!(instance.problem, Problem::Sfvs | Problem::Nmc) {
        return Err(OracleError::Unsupported(instance.problem));
    }
    let n = instance.n();
    let mut protected = FixedBitSet::with_capacity(n);
    for v in 0..n {
        if !deletable_vertices(instance).contains(&v) {
            protected.insert(v);
        }
    }
    let mut kept = FixedBitSet::with_capacity(n);
    kept.insert_range(..);
    let mut best: Option<(u64, Vec<VertexId>)> = None;
    let mut count = 0u64;
    branch(instance, &mut kept, &mut protected, 0, budget, &mut best, &mut count);
    Ok(best.map(|(w, mut set)| {
        set.sort_unstable();
        OracleResult {
            optimum_weight: w,
            deletion: Deletion::Vertices(set),
            optimal_count: count,
        }
    }))
}

fn branch(
    instance: &LabeledInstance,
    kept: &mut VertexSet,
    protected: &mut VertexSet,
    used: u64,
    budget: u64,
    best: &mut Option<(u64, Vec<VertexId>)>,
    count: &mut u64,
) {
    if used > budget || best.as_ref().is_some_and(|b| used > b.0) {
        return;
    }
    let obstruction = match instance.problem {
        Problem::Sfvs => short_s_cycle(&instance.graph, kept, &instance.s_vertices),
        _ => short_terminal_path(&instance.graph, kept, &instance.terminals),
    };
    let Some(obs) = obstruction else {
        let set: Vec<VertexId> = (0..instance.n()).filter(|&v| !kept.contains(v)).collect();
        match best {
            Some(b) if b.0 == used => *count += 1,
            _ => {
                *best = Some((used, set));
                *count = 1;
            }
        }
        return;
    };
    let choices: Vec<VertexId> = obs.into_iter().filter(|&v| !protected.contains(v)).collect();
    let mut newly = Vec::new();
    for v in choices {
        kept.set(v, false);
        branch(instance, kept, protected, used + instance.weights[v], budget, best, count);
        kept.insert(v);
        protected.insert(v);
        newly.push(v);
    }
    for v in newly {
        protected.set(v, false);
    }
}

/// Weight of a heaviest induced forest, found by enumerating kept sets and
/// checking acyclicity with union-find.
pub fn max_induced_forest_weight(graph: &Graph, weights: &[u64]) -> u64 {
    let n = graph.n();
    assert!(n <= 20, "enumeration over {n} vertices refused");
    let edges: Vec<Edge> = graph.edges().collect();
    (0u32..1 << n)
        .filter(|mask| {
            let mut uf = UnionFind::new(n);
            edges
                .iter()
                .filter(|(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
                .all(|&(u, v)| uf.union(u, v))
        })
        .map(|mask| (0..n).filter(|v| mask >> v & 1 == 1).map(|v| weights[v]).sum())
        .max()
        .unwrap_or(0)
}

/// Where a partial solution lives: the bag of node `t` and `V(G_t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeContext {
    pub bag: Vec<VertexId>,
    pub inside: VertexSet,
}

/// A boundaried graph glued onto the bag: `extra` new vertices numbered from
/// `n`, their membership in `S`, and the added edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    pub extra: usize,
    pub extra_in_s: Vec<bool>,
    pub edges: Vec<Edge>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConsistencyError {
    #[error("the two partial solutions have different signatures")]
    SignatureMismatch,
    #[error("completion with {} extra vertices separates the two sets", .0.extra)]
    Counterexample(Completion),
}

/// Draws a completion: `|W|` uniform in `[0, |bag| + 3]`, each vertex of `W`
/// in `S` with probability 1/2, and each non-adjacent pair of `W ∪ bag`
/// joined with probability 1/2.
pub fn sample_completion(graph: &Graph, bag: &[VertexId], rng: &mut impl Rng) -> Completion {
    let n = graph.n();
    let extra = rng.gen_range(0..=bag.len() + 3);
    let extra_in_s = (0..extra).map(|_| rng.gen_bool(0.5)).collect();
    let ends: Vec<VertexId> = bag.iter().copied().chain(n..n + extra).collect();
    let mut edges = Vec::new();
    for (a, &u) in ends.iter().enumerate() {
        for &v in &ends[a + 1..] {
            let present = u < n && v < n && graph.has_edge(u, v);
            if !present && rng.gen_bool(0.5) {
                edges.push(edge_key(u, v));
            }
        }
    }
    Completion {
        extra,
        extra_in_s,
        edges,
    }
}

/// Whether `G[X ∪ W]` passes the predicate of `mode`, where `X ⊆ V(G_t)` and
/// `W` is glued on by `completion`.
pub fn completed_ok(
    instance: &LabeledInstance,
    x: &VertexSet,
    ctx: &NodeContext,
    completion: &Completion,
    mode: Mode,
) -> bool {
    let n = instance.n();
    let total = n + completion.extra;
    let mut g = Graph::new(total);
    for (u, v) in instance.graph.edges() {
        if ctx.inside.contains(u) && ctx.inside.contains(v) {
            g.add_edge(u, v).expect("edges of G are simple");
        }
    }
    for &(u, v) in &completion.edges {
        g.add_edge(u, v).expect("completion edges are new");
    }
    let mut s = instance.s_vertices.clone();
    s.grow(total);
    let mut subset = x.clone();
    subset.grow(total);
    for i in 0..completion.extra {
        subset.insert(n + i);
        if completion.extra_in_s[i] {
            s.insert(n + i);
        }
    }
    match mode {
        Mode::Soct => is_s_bipartite(&g, &subset, &s),
        Mode::Sfvs => !has_s_traversing_cycle(&g, &subset, &s),
    }
}

/// Samples `trials` completions and returns the first one on which `X` and
/// `Y` disagree. No precondition on signatures.
pub fn completion_agreement(
    instance: &LabeledInstance,
    x: &VertexSet,
    y: &VertexSet,
    ctx: &NodeContext,
    trials: usize,
    seed: u64,
    mode: Mode,
) -> Result<(), Completion> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let c = sample_completion(&instance.graph, &ctx.bag, &mut rng);
        if completed_ok(instance, x, ctx, &c, mode) != completed_ok(instance, y, ctx, &c, mode) {
            return Err(c);
        }
    }
    Ok(())
}

/// Checks that two partial solutions with equal signatures behave alike
/// under `trials` random completions.
pub fn completion_consistency(
    instance: &LabeledInstance,
    x: &VertexSet,
    y: &VertexSet,
    ctx: &NodeContext,
    trials: usize,
    seed: u64,
    mode: Mode,
) -> Result<(), ConsistencyError> {
    let sx = signature(instance, x, &ctx.bag, mode).map_err(|_| ConsistencyError::SignatureMismatch)?;
    let sy = signature(instance, y, &ctx.bag, mode).map_err(|_| ConsistencyError::SignatureMismatch)?;
    if sx != sy {
        return Err(ConsistencyError::SignatureMismatch);
    }
    completion_agreement(instance, x, y, ctx, trials, seed, mode)
        .map_err(ConsistencyError::Counterexample)
}
