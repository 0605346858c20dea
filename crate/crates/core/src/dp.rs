//! Table-based dynamic programming over nice tree decompositions for weighted
//! Subset Odd Cycle Transversal and Subset Feedback Vertex Set.
//!
//! Both problems are solved as maximisation: find a heaviest kept set `X`
//! such that `G[X]` is valid (S-bipartite, or free of S-traversing cycles).
//! A table maps every equivalence class of partial solutions at a node to
//! its heaviest member. Classes are identified by a [`Signature`] built from
//! the pruned block-cut forest of `G[X]`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::time::Instant;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{
    color_block, raw_blocks, set_of, Graph, LabeledInstance, ParityOracle, PathParity, VertexId,
    VertexSet,
};
use crate::td::{validate_td, NiceKind, NiceTreeDecomposition};

/// Which validity predicate and which labels the engine uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Kept graph must be S-bipartite.
    Soct,
    /// Kept graph must have no cycle through S; bipartiteness is ignored.
    Sfvs,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DpError {
    #[error("vertex set violates the validity predicate")]
    InvalidSet,
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("forced vertices admit no valid kept set")]
    Infeasible,
    #[error("table of child node {0} is missing")]
    MissingChild(usize),
}

/// Node label of the auxiliary forest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AuxLabel {
    /// Cut vertex of `G[X]` lying in the bag.
    Cut(VertexId),
    /// Active block with its bag vertices.
    Block {
        bag: Vec<VertexId>,
        meets_s: bool,
        bipartite: bool,
    },
    InactiveCut,
    InactiveBlock,
}

/// An edge of the auxiliary forest standing for a path of the block-cut
/// forest; `m_*` describe the union of the blocks on that path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuxEdge {
    pub a: usize,
    pub b: usize,
    pub m_bipartite: bool,
    pub m_s: bool,
}

/// Block-cut forest of the bag-touching components of `G[X]`, with inactive
/// leaves pruned and inactive degree-2 nodes contracted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AuxForest {
    pub nodes: Vec<AuxLabel>,
    pub edges: Vec<AuxEdge>,
}

/// Canonical class key of a partial solution at a node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    /// `X` intersected with the bag, sorted.
    pub boundary: Vec<VertexId>,
    pub forest_code: String,
    /// Parities for the pairs `(boundary[i], boundary[j])`, `i < j`, in
    /// lexicographic order. Empty in SFVS mode.
    pub parities: Vec<PathParity>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSolution {
    pub vertices: VertexSet,
    pub weight: u64,
}

impl PartialSolution {
    /// Heavier first, then lexicographically smaller vertex list.
    fn beats(&self, other: &PartialSolution) -> bool {
        match self.weight.cmp(&other.weight) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => self.vertices.ones().cmp(other.vertices.ones()) == Ordering::Less,
        }
    }
}

/// One heaviest partial solution per signature. The boundary is part of the
/// signature, so a single reduced set covers every `I` of a node.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReducedSet {
    pub classes: BTreeMap<Signature, PartialSolution>,
}

impl ReducedSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Representatives whose boundary equals `boundary`.
    pub fn with_boundary<'a>(
        &'a self,
        boundary: &'a [VertexId],
    ) -> impl Iterator<Item = &'a PartialSolution> + 'a {
        self.classes
            .iter()
            .filter(move |(s, _)| s.boundary == boundary)
            .map(|(_, p)| p)
    }

    fn from_map(map: HashMap<Signature, PartialSolution>) -> Self {
        ReducedSet {
            classes: map.into_iter().collect(),
        }
    }
}

fn offer(map: &mut HashMap<Signature, PartialSolution>, sig: Signature, sol: PartialSolution) {
    match map.get_mut(&sig) {
        Some(cur) => {
            if sol.beats(cur) {
                *cur = sol;
            }
        }
        None => {
            map.insert(sig, sol);
        }
    }
}

fn merge(
    mut a: HashMap<Signature, PartialSolution>,
    b: HashMap<Signature, PartialSolution>,
) -> HashMap<Signature, PartialSolution> {
    for (s, p) in b {
        offer(&mut a, s, p);
    }
    a
}

struct Analysis {
    forest: AuxForest,
    parities: Vec<PathParity>,
}

/// Builds the auxiliary forest of `X` at a bag and, in SOCT mode, the parity
/// table. Returns `None` if a bag-touching block violates the predicate.
fn analyze(
    graph: &Graph,
    s: &VertexSet,
    x: &VertexSet,
    bag: &VertexSet,
    boundary: &[VertexId],
    mode: Mode,
) -> Option<Analysis> {
    let n = graph.n();
    let blocks = raw_blocks(graph, x, boundary.iter().copied());
    let nb = blocks.len();
    let mut meets_s = vec![false; nb];
    let mut bipartite = vec![true; nb];
    let mut mark = FixedBitSet::with_capacity(n);
    let mut color = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        meets_s[i] = b.iter().any(|&v| s.contains(v));
        if b.len() < 3 {
            continue;
        }
        match mode {
            Mode::Sfvs if meets_s[i] => return None,
            Mode::Sfvs => {}
            Mode::Soct => {
                if color.is_empty() {
                    color = vec![0u8; n];
                }
                for &v in b {
                    mark.insert(v);
                }
                bipartite[i] = color_block(graph, b, &mark, &mut color);
                for &v in b {
                    mark.set(v, false);
                }
                if meets_s[i] && !bipartite[i] {
                    return None;
                }
            }
        }
    }

    // Cut vertices get node ids nb.. in order of first appearance.
    let mut cut_id: HashMap<VertexId, usize> = HashMap::new();
    let mut seen: HashMap<VertexId, u32> = HashMap::new();
    for b in &blocks {
        for &v in b {
            *seen.entry(v).or_insert(0) += 1;
        }
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nb];
    let mut cut_vertex: Vec<VertexId> = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            if seen[&v] > 1 {
                let id = *cut_id.entry(v).or_insert_with(|| {
                    cut_vertex.push(v);
                    adj.push(Vec::new());
                    nb + cut_vertex.len() - 1
                });
                adj[i].push(id);
                adj[id].push(i);
            }
        }
    }
    let total = adj.len();

    let block_bag: Vec<Vec<VertexId>> = blocks
        .iter()
        .map(|b| {
            let mut w: Vec<VertexId> = b.iter().copied().filter(|&v| bag.contains(v)).collect();
            w.sort_unstable();
            w
        })
        .collect();
    let active: Vec<bool> = (0..total)
        .map(|u| {
            if u < nb {
                let w = &block_bag[u];
                w.len() >= 2 || (w.len() == 1 && !cut_id.contains_key(&w[0]))
            } else {
                bag.contains(cut_vertex[u - nb])
            }
        })
        .collect();

    // Operation 1: strip inactive leaves and isolated inactive nodes.
    let mut alive = vec![true; total];
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut queue: Vec<usize> = (0..total).filter(|&u| !active[u] && deg[u] <= 1).collect();
    while let Some(u) = queue.pop() {
        if !alive[u] {
            continue;
        }
        alive[u] = false;
        for &w in &adj[u] {
            if alive[w] {
                deg[w] -= 1;
                if !active[w] && deg[w] <= 1 {
                    queue.push(w);
                }
            }
        }
    }

    // Operation 2: contract maximal paths of inactive degree-2 nodes.
    let key: Vec<bool> = (0..total)
        .map(|u| alive[u] && (active[u] || deg[u] != 2))
        .collect();
    let mut new_id = vec![usize::MAX; total];
    let mut nodes = Vec::new();
    for u in 0..total {
        if !key[u] {
            continue;
        }
        new_id[u] = nodes.len();
        nodes.push(match (u < nb, active[u]) {
            (true, true) => AuxLabel::Block {
                bag: block_bag[u].clone(),
                meets_s: meets_s[u],
                bipartite: bipartite[u],
            },
            (true, false) => AuxLabel::InactiveBlock,
            (false, true) => AuxLabel::Cut(cut_vertex[u - nb]),
            (false, false) => AuxLabel::InactiveCut,
        });
    }
    let mut edges = Vec::new();
    let flags = |u: usize, m_bip: &mut bool, m_s: &mut bool| {
        if u < nb {
            *m_bip &= bipartite[u];
            *m_s |= meets_s[u];
        }
    };
    for u in 0..total {
        if !key[u] {
            continue;
        }
        for &first in &adj[u] {
            if !alive[first] {
                continue;
            }
            let (mut m_bip, mut m_s) = (true, false);
            flags(u, &mut m_bip, &mut m_s);
            let (mut prev, mut cur) = (u, first);
            while !key[cur] {
                flags(cur, &mut m_bip, &mut m_s);
                let next = adj[cur]
                    .iter()
                    .copied()
                    .find(|&w| alive[w] && w != prev)
                    .expect("inactive degree-2 node has a second neighbour");
                prev = cur;
                cur = next;
            }
            flags(cur, &mut m_bip, &mut m_s);
            if u < cur {
                edges.push(AuxEdge {
                    a: new_id[u],
                    b: new_id[cur],
                    m_bipartite: m_bip,
                    m_s,
                });
            }
        }
    }

    let parities = match mode {
        Mode::Sfvs => Vec::new(),
        Mode::Soct => {
            let oracle = ParityOracle::new(graph, &blocks, &bipartite);
            let mut out = Vec::with_capacity(boundary.len() * boundary.len().saturating_sub(1) / 2);
            for i in 0..boundary.len() {
                for j in i + 1..boundary.len() {
                    out.push(oracle.parity(boundary[i], boundary[j]));
                }
            }
            out
        }
    };
    Some(Analysis {
        forest: AuxForest { nodes, edges },
        parities,
    })
}

fn node_code(label: &AuxLabel, mode: Mode, out: &mut String) {
    match label {
        AuxLabel::Cut(v) => {
            let _ = write!(out, "C{v}");
        }
        AuxLabel::Block {
            bag,
            meets_s,
            bipartite,
        } => {
            out.push('B');
            for v in bag {
                let _ = write!(out, "{v},");
            }
            out.push(if *meets_s { 's' } else { '-' });
            if mode == Mode::Soct {
                out.push(if *bipartite { 'p' } else { 'n' });
            }
        }
        AuxLabel::InactiveCut => out.push('c'),
        AuxLabel::InactiveBlock => out.push('b'),
    }
}

fn edge_code(e: &AuxEdge, mode: Mode) -> &'static str {
    match (mode, e.m_bipartite, e.m_s) {
        (Mode::Sfvs, _, true) => "S",
        (Mode::Sfvs, _, false) => "-",
        (Mode::Soct, true, true) => "pS",
        (Mode::Soct, true, false) => "p-",
        (Mode::Soct, false, true) => "nS",
        (Mode::Soct, false, false) => "n-",
    }
}

fn rooted_code(
    forest: &AuxForest,
    adj: &[Vec<(usize, &'static str)>],
    v: usize,
    parent: usize,
    mode: Mode,
) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|(w, _)| *w != parent)
        .map(|&(w, e)| {
            let mut s = String::from(e);
            s.push_str(&rooted_code(forest, adj, w, v, mode));
            s
        })
        .collect();
    kids.sort_unstable();
    let mut out = String::from("(");
    node_code(&forest.nodes[v], mode, &mut out);
    for k in kids {
        out.push_str(&k);
    }
    out.push(')');
    out
}

/// Canonical code of a labelled forest: every tree is encoded rooted at its
/// center (the smaller code wins for bicentral trees), children sorted, and
/// the tree codes are sorted.
pub fn forest_code(forest: &AuxForest, mode: Mode) -> String {
    let k = forest.nodes.len();
    let mut adj: Vec<Vec<(usize, &'static str)>> = vec![Vec::new(); k];
    for e in &forest.edges {
        let c = edge_code(e, mode);
        adj[e.a].push((e.b, c));
        adj[e.b].push((e.a, c));
    }
    let mut comp = vec![usize::MAX; k];
    let mut trees = Vec::new();
    for start in 0..k {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut members = vec![start];
        comp[start] = start;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            i += 1;
            for &(w, _) in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = start;
                    members.push(w);
                }
            }
        }
        // Peel leaves until one or two centers remain.
        let mut deg: Vec<usize> = members.iter().map(|&v| adj[v].len()).collect();
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut removed = vec![false; members.len()];
        let mut left = members.len();
        let mut layer: Vec<usize> = (0..members.len()).filter(|&i| deg[i] <= 1).collect();
        while left > 2 {
            let mut next = Vec::new();
            for &i in &layer {
                removed[i] = true;
                left -= 1;
            }
            for &i in &layer {
                for &(w, _) in &adj[members[i]] {
                    let j = pos[&w];
                    if !removed[j] {
                        deg[j] -= 1;
                        if deg[j] == 1 {
                            next.push(j);
                        }
                    }
                }
            }
            layer = next;
        }
        let code = (0..members.len())
            .filter(|&i| !removed[i])
            .map(|i| rooted_code(forest, &adj, members[i], usize::MAX, mode))
            .min()
            .expect("nonempty tree has a center");
        trees.push(code);
    }
    trees.sort_unstable();
    trees.concat()
}

fn boundary_of(x: &VertexSet, bag: &[VertexId]) -> Vec<VertexId> {
    bag.iter().copied().filter(|&v| x.contains(v)).collect()
}

/// Auxiliary forest of `X` at `bag`, with all labels of the SOCT profile.
/// Fails if `G[X]` restricted to the bag-touching components is not
/// S-bipartite.
pub fn aux_forest(
    instance: &LabeledInstance,
    x: &VertexSet,
    bag: &[VertexId],
) -> Result<AuxForest, DpError> {
    let bag_set = set_of(instance.n(), bag.iter().copied());
    let boundary = boundary_of(x, bag);
    analyze(&instance.graph, &instance.s_vertices, x, &bag_set, &boundary, Mode::Soct)
        .map(|a| a.forest)
        .ok_or(DpError::InvalidSet)
}

/// Signature of `X` at `bag` under the given profile.
pub fn signature(
    instance: &LabeledInstance,
    x: &VertexSet,
    bag: &[VertexId],
    mode: Mode,
) -> Result<Signature, DpError> {
    let ctx = Ctx::new(instance, mode);
    ctx.signature(x, &ctx.bag_set(bag), bag).ok_or(DpError::InvalidSet)
}

/// Keeps one heaviest representative per signature, dropping invalid sets.
pub fn reduce_set(
    instance: &LabeledInstance,
    candidates: Vec<VertexSet>,
    bag: &[VertexId],
    mode: Mode,
) -> ReducedSet {
    let ctx = Ctx::new(instance, mode);
    let bag_set = ctx.bag_set(bag);
    let map = candidates
        .into_par_iter()
        .filter_map(|x| {
            let sig = ctx.signature(&x, &bag_set, bag)?;
            let weight = instance.weight_of(&x);
            Some((sig, PartialSolution { vertices: x, weight }))
        })
        .fold(HashMap::new, |mut m, (s, p)| {
            offer(&mut m, s, p);
            m
        })
        .reduce(HashMap::new, merge);
    ReducedSet::from_map(map)
}

struct Ctx<'a> {
    instance: &'a LabeledInstance,
    mode: Mode,
}

impl<'a> Ctx<'a> {
    fn new(instance: &'a LabeledInstance, mode: Mode) -> Self {
        Ctx { instance, mode }
    }

    fn bag_set(&self, bag: &[VertexId]) -> VertexSet {
        set_of(self.instance.n(), bag.iter().copied())
    }

    fn signature(&self, x: &VertexSet, bag_set: &VertexSet, bag: &[VertexId]) -> Option<Signature> {
        let boundary = boundary_of(x, bag);
        let a = analyze(
            &self.instance.graph,
            &self.instance.s_vertices,
            x,
            bag_set,
            &boundary,
            self.mode,
        )?;
        Some(Signature {
            boundary,
            forest_code: forest_code(&a.forest, self.mode),
            parities: a.parities,
        })
    }

    fn collect<I>(&self, items: I, bag: &[VertexId]) -> ReducedSet
    where
        I: ParallelIterator<Item = PartialSolution>,
    {
        let bag_set = self.bag_set(bag);
        let map = items
            .filter_map(|p| Some((self.signature(&p.vertices, &bag_set, bag)?, p)))
            .fold(HashMap::new, |mut m, (s, p)| {
                offer(&mut m, s, p);
                m
            })
            .reduce(HashMap::new, merge);
        ReducedSet::from_map(map)
    }
}

/// Computes the table of node `t` from the tables of its children, listed
/// in the order of `nice.nodes[t].children`.
pub fn dp_step(
    instance: &LabeledInstance,
    nice: &NiceTreeDecomposition,
    t: usize,
    children: &[&ReducedSet],
    mode: Mode,
) -> Result<ReducedSet, DpError> {
    let node = &nice.nodes[t];
    if children.len() != node.children.len() {
        return Err(DpError::MissingChild(
            node.children.get(children.len()).copied().unwrap_or(t),
        ));
    }
    let ctx = Ctx::new(instance, mode);
    let n = instance.n();
    Ok(match node.kind {
        NiceKind::Leaf => {
            let empty = PartialSolution {
                vertices: FixedBitSet::with_capacity(n),
                weight: 0,
            };
            let mut classes = BTreeMap::new();
            classes.insert(
                Signature {
                    boundary: Vec::new(),
                    forest_code: String::new(),
                    parities: Vec::new(),
                },
                empty,
            );
            ReducedSet { classes }
        }
        NiceKind::Introduce(v) => {
            let child = children[0];
            let forced = instance.forced_keep.contains(v);
            let wv = instance.weights[v];
            let mut out = ctx.collect(
                child.classes.par_iter().map(|(_, p)| {
                    let mut vertices = p.vertices.clone();
                    vertices.insert(v);
                    PartialSolution {
                        vertices,
                        weight: p.weight + wv,
                    }
                }),
                &node.bag,
            );
            if !forced {
                // Without v the class key does not change.
                for (s, p) in &child.classes {
                    out.classes.insert(s.clone(), p.clone());
                }
            }
            out
        }
        NiceKind::Forget(_) => ctx.collect(
            children[0].classes.par_iter().map(|(_, p)| p.clone()),
            &node.bag,
        ),
        NiceKind::Join => {
            let mut groups: BTreeMap<&[VertexId], (Vec<&PartialSolution>, Vec<&PartialSolution>)> =
                BTreeMap::new();
            for (s, p) in &children[0].classes {
                groups.entry(&s.boundary).or_default().0.push(p);
            }
            for (s, p) in &children[1].classes {
                groups.entry(&s.boundary).or_default().1.push(p);
            }
            let pairs: Vec<(&PartialSolution, &PartialSolution, u64)> = groups
                .iter()
                .flat_map(|(b, (l, r))| {
                    let shared: u64 = b.iter().map(|&v| instance.weights[v]).sum();
                    l.iter()
                        .flat_map(move |&a| r.iter().map(move |&c| (a, c, shared)))
                })
                .collect();
            ctx.collect(
                pairs.into_par_iter().map(|(a, c, shared)| {
                    let mut vertices = a.vertices.clone();
                    vertices.union_with(&c.vertices);
                    PartialSolution {
                        vertices,
                        weight: a.weight + c.weight - shared,
                    }
                }),
                &node.bag,
            )
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Worker threads; 0 uses the rayon default.
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { threads: 1 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DpStats {
    pub nodes: usize,
    pub max_classes: usize,
    pub width: usize,
    pub millis: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpSolution {
    pub max_weight: u64,
    pub kept_set: VertexSet,
    pub deletion_weight: u64,
    pub deletion_set: VertexSet,
    pub feasible_within_budget: bool,
    pub stats: DpStats,
}

fn check_decomposition(instance: &LabeledInstance, nice: &NiceTreeDecomposition) -> Result<(), DpError> {
    if nice.n_vertices != instance.n() {
        return Err(DpError::InvalidDecomposition(format!(
            "decomposition has {} vertices, instance {}",
            nice.n_vertices,
            instance.n()
        )));
    }
    nice.check_shape().map_err(DpError::InvalidDecomposition)?;
    let mut parents = vec![0usize; nice.nodes.len()];
    for t in &nice.nodes {
        for &c in &t.children {
            parents[c] += 1;
        }
    }
    if parents[..nice.nodes.len() - 1].iter().any(|&p| p != 1) {
        return Err(DpError::InvalidDecomposition("nodes do not form a rooted tree".into()));
    }
    validate_td(&instance.graph, &nice.to_tree_decomposition())
        .map_err(|v| DpError::InvalidDecomposition(v.to_string()))
}

/// Runs the dynamic program bottom-up and returns the heaviest valid kept set.
pub fn solve_with(
    instance: &LabeledInstance,
    nice: &NiceTreeDecomposition,
    mode: Mode,
    options: &SolveOptions,
) -> Result<DpSolution, DpError> {
    check_decomposition(instance, nice)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.threads)
        .build()
        .map_err(|e| DpError::InvalidDecomposition(format!("thread pool: {e}")))?;
    pool.install(|| run(instance, nice, mode))
}

fn run(
    instance: &LabeledInstance,
    nice: &NiceTreeDecomposition,
    mode: Mode,
) -> Result<DpSolution, DpError> {
    let start = Instant::now();
    let mut tables: Vec<Option<ReducedSet>> = vec![None; nice.nodes.len()];
    let mut max_classes = 0;
    for t in 0..nice.nodes.len() {
        let kids: Vec<ReducedSet> = nice.nodes[t]
            .children
            .iter()
            .map(|&c| tables[c].take().ok_or(DpError::MissingChild(c)))
            .collect::<Result<_, _>>()?;
        let refs: Vec<&ReducedSet> = kids.iter().collect();
        let table = dp_step(instance, nice, t, &refs, mode)?;
        max_classes = max_classes.max(table.len());
        if table.is_empty() {
            return Err(DpError::Infeasible);
        }
        tables[t] = Some(table);
    }
    let root = tables[nice.root()].take().ok_or(DpError::MissingChild(nice.root()))?;
    let best = root
        .classes
        .into_values()
        .next()
        .ok_or(DpError::Infeasible)?;
    let total = instance.total_weight();
    let mut deletion_set = best.vertices.clone();
    deletion_set.toggle_range(..);
    let deletion_weight = total - best.weight;
    Ok(DpSolution {
        max_weight: best.weight,
        kept_set: best.vertices,
        deletion_weight,
        deletion_set,
        feasible_within_budget: deletion_weight <= instance.budget,
        stats: DpStats {
            nodes: nice.nodes.len(),
            max_classes,
            width: nice.width(),
            millis: start.elapsed().as_millis(),
        },
    })
}

/// Weighted Subset Odd Cycle Transversal, single-threaded.
pub fn solve_soct(
    instance: &LabeledInstance,
    nice: &NiceTreeDecomposition,
) -> Result<DpSolution, DpError> {
    solve_with(instance, nice, Mode::Soct, &SolveOptions::default())
}

/// Weighted Subset Feedback Vertex Set, single-threaded.
pub fn solve_sfvs(
    instance: &LabeledInstance,
    nice: &NiceTreeDecomposition,
) -> Result<DpSolution, DpError> {
    solve_with(instance, nice, Mode::Sfvs, &SolveOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{bowtie, complete, cycle, path};
    use crate::graph::{is_s_bipartite, has_s_traversing_cycle, Problem};
    use crate::td::{heuristic_td, nicify};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn inst(g: Graph, s: &[VertexId]) -> LabeledInstance {
        LabeledInstance::new(g, Problem::Soct).with_s(s.iter().copied())
    }

    fn nice_of(i: &LabeledInstance) -> NiceTreeDecomposition {
        nicify(&heuristic_td(&i.graph), &i.graph).unwrap()
    }

    fn set(n: usize, v: &[VertexId]) -> VertexSet {
        set_of(n, v.iter().copied())
    }

    // Exhaustive maximum kept weight.
    fn brute(i: &LabeledInstance, mode: Mode) -> Option<u64> {
        let n = i.n();
        (0u32..1 << n)
            .filter_map(|mask| {
                let x = set_of(n, (0..n).filter(|v| mask >> v & 1 == 1));
                if i.forced_keep.ones().any(|v| !x.contains(v)) {
                    return None;
                }
                let ok = match mode {
                    Mode::Soct => is_s_bipartite(&i.graph, &x, &i.s_vertices),
                    Mode::Sfvs => !has_s_traversing_cycle(&i.graph, &x, &i.s_vertices),
                };
                ok.then(|| i.weight_of(&x))
            })
            .max()
    }

    #[test]
    fn aux_forest_single_edge() {
        let i = inst(path(2), &[]);
        let f = aux_forest(&i, &set(2, &[0, 1]), &[0, 1]).unwrap();
        assert_eq!(f.nodes.len(), 1);
        assert!(matches!(&f.nodes[0], AuxLabel::Block { bag, .. } if bag == &vec![0, 1]));
        assert!(f.edges.is_empty());
    }

    #[test]
    fn aux_forest_path_through_private_vertex() {
        // u=0, w=1, v=2; w is outside the bag.
        for s in [vec![], vec![1]] {
            let i = inst(path(3), &s);
            let f = aux_forest(&i, &set(3, &[0, 1, 2]), &[0, 2]).unwrap();
            assert_eq!(f.nodes.len(), 2);
            assert_eq!(f.edges.len(), 1);
            assert!(f.edges[0].m_bipartite);
            assert_eq!(f.edges[0].m_s, !s.is_empty());
        }
    }

    #[test]
    fn aux_forest_isolated_bag_vertex() {
        let i = inst(path(3), &[]);
        let f = aux_forest(&i, &set(3, &[0]), &[0, 1]).unwrap();
        assert_eq!(
            f.nodes,
            vec![AuxLabel::Block {
                bag: vec![0],
                meets_s: false,
                bipartite: true
            }]
        );
    }

    #[test]
    fn aux_forest_rejects_invalid_set() {
        let i = inst(cycle(3), &[0]);
        assert_eq!(aux_forest(&i, &set(3, &[0, 1, 2]), &[0]), Err(DpError::InvalidSet));
    }

    #[test]
    fn signatures_of_parallel_paths() {
        // 0 - 1 - 2 and 0 - 3 - 2, bag {0, 2}.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 3), (3, 2)]).unwrap();
        let plain = inst(g.clone(), &[]);
        let x = set(4, &[0, 1, 2]);
        let y = set(4, &[0, 3, 2]);
        for mode in [Mode::Soct, Mode::Sfvs] {
            let a = signature(&plain, &x, &[0, 2], mode).unwrap();
            assert_eq!(a, signature(&plain, &x, &[0, 2], mode).unwrap());
            assert_eq!(a, signature(&plain, &y, &[0, 2], mode).unwrap());
        }
        let marked = inst(g, &[1]);
        assert_ne!(
            signature(&marked, &x, &[0, 2], Mode::Soct).unwrap(),
            signature(&marked, &y, &[0, 2], Mode::Soct).unwrap()
        );
    }

    #[test]
    fn reduce_keeps_heaviest() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 3), (3, 2)]).unwrap();
        let i = inst(g, &[]).with_weights(vec![1, 5, 1, 7]);
        let r = reduce_set(&i, vec![set(4, &[0, 1, 2]), set(4, &[0, 3, 2])], &[0, 2], Mode::Soct);
        assert_eq!(r.len(), 1);
        assert_eq!(r.classes.values().next().unwrap().weight, 9);
        assert!(reduce_set(&i, vec![], &[0, 2], Mode::Soct).is_empty());
        let tri = inst(cycle(3), &[0]);
        assert!(reduce_set(&tri, vec![set(3, &[0, 1, 2])], &[0], Mode::Soct).is_empty());
    }

    #[test]
    fn leaf_and_introduce_steps() {
        let i = inst(path(2), &[]);
        let nice = nice_of(&i);
        let leaf = nice.nodes.iter().position(|t| t.kind == NiceKind::Leaf).unwrap();
        let r = dp_step(&i, &nice, leaf, &[], Mode::Soct).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.classes.values().next().unwrap().weight, 0);
        // Introduce over the leaf: the entry without v is the child's entry.
        let intro = leaf + 1;
        assert!(matches!(nice.nodes[intro].kind, NiceKind::Introduce(_)));
        let out = dp_step(&i, &nice, intro, &[&r], Mode::Soct).unwrap();
        assert_eq!(out.len(), 2);
        let (s, p) = r.classes.iter().next().unwrap();
        assert_eq!(out.classes.get(s), Some(p));
    }

    #[test]
    fn join_of_single_representatives() {
        // Two-node toy: path 1 - 0 - 2, join over bag {0}.
        let g = Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
        let i = inst(g, &[]);
        let nice = NiceTreeDecomposition {
            nodes: vec![
                node(NiceKind::Leaf, &[], &[]),
                node(NiceKind::Introduce(0), &[0], &[0]),
                node(NiceKind::Introduce(1), &[0, 1], &[1]),
                node(NiceKind::Forget(1), &[0], &[2]),
                node(NiceKind::Leaf, &[], &[]),
                node(NiceKind::Introduce(0), &[0], &[4]),
                node(NiceKind::Introduce(2), &[0, 2], &[5]),
                node(NiceKind::Forget(2), &[0], &[6]),
                node(NiceKind::Join, &[0], &[3, 7]),
                node(NiceKind::Forget(0), &[], &[8]),
            ],
            n_vertices: 3,
        };
        let mut left = ReducedSet::default();
        let mut right = ReducedSet::default();
        let x1 = set(3, &[0, 1]);
        let x2 = set(3, &[0, 2]);
        left.classes.insert(
            signature(&i, &x1, &[0], Mode::Soct).unwrap(),
            PartialSolution { vertices: x1, weight: 2 },
        );
        right.classes.insert(
            signature(&i, &x2, &[0], Mode::Soct).unwrap(),
            PartialSolution { vertices: x2, weight: 2 },
        );
        let out = dp_step(&i, &nice, 8, &[&left, &right], Mode::Soct).unwrap();
        assert_eq!(out.len(), 1);
        let p = out.classes.values().next().unwrap();
        assert_eq!(p.vertices, set(3, &[0, 1, 2]));
        assert_eq!(p.weight, 3);
        assert_eq!(solve_soct(&i, &nice).unwrap().deletion_weight, 0);
    }

    fn node(kind: NiceKind, bag: &[VertexId], children: &[usize]) -> crate::td::NiceNode {
        crate::td::NiceNode {
            kind,
            bag: bag.to_vec(),
            children: children.to_vec(),
        }
    }

    #[test]
    fn soct_examples() {
        let c5 = inst(cycle(5), &[0]);
        assert_eq!(solve_soct(&c5, &nice_of(&c5)).unwrap().deletion_weight, 1);
        let c4 = inst(cycle(4), &[0, 1, 2, 3]);
        assert_eq!(solve_soct(&c4, &nice_of(&c4)).unwrap().deletion_weight, 0);
        let k4 = inst(complete(4), &[0]);
        let sol = solve_soct(&k4, &nice_of(&k4)).unwrap();
        assert_eq!(sol.deletion_weight, 1);
        assert_eq!(sol.deletion_set, set(4, &[0]));
    }

    #[test]
    fn sfvs_examples() {
        let tri = inst(cycle(3), &[0]);
        assert_eq!(solve_sfvs(&tri, &nice_of(&tri)).unwrap().deletion_weight, 1);
        let c4 = inst(cycle(4), &[0]);
        assert_eq!(solve_sfvs(&c4, &nice_of(&c4)).unwrap().deletion_weight, 1);
        let bt = inst(bowtie(), &[0]);
        let sol = solve_sfvs(&bt, &nice_of(&bt)).unwrap();
        assert_eq!(sol.deletion_weight, 1);
        assert_eq!(sol.deletion_set, set(5, &[0]));
    }

    #[test]
    fn forced_vertices() {
        let mut tri = inst(cycle(3), &[0]);
        tri.forced_keep = set(3, &[0, 1, 2]);
        assert_eq!(solve_sfvs(&tri, &nice_of(&tri)), Err(DpError::Infeasible));
        tri.forced_keep = set(3, &[0]);
        let sol = solve_sfvs(&tri, &nice_of(&tri)).unwrap();
        assert!(sol.kept_set.contains(0));
        assert_eq!(sol.deletion_weight, 1);
    }

    #[test]
    fn rejects_foreign_decomposition() {
        let i = inst(cycle(4), &[0]);
        let other = nice_of(&inst(path(4), &[]));
        assert!(matches!(solve_soct(&i, &other), Err(DpError::InvalidDecomposition(_))));
    }

    #[test]
    fn matches_exhaustive_search_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..120 {
            let n = rng.gen_range(1..=9);
            let p = [0.25, 0.4, 0.6][rng.gen_range(0..3)];
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let s: Vec<VertexId> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
            let w: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=5)).collect();
            let i = inst(g, &s).with_weights(w);
            let nice = nice_of(&i);
            for mode in [Mode::Soct, Mode::Sfvs] {
                let sol = solve_with(&i, &nice, mode, &SolveOptions::default()).unwrap();
                assert_eq!(Some(sol.max_weight), brute(&i, mode), "{mode:?} on {:?}", i.graph);
                assert_eq!(i.weight_of(&sol.kept_set), sol.max_weight);
            }
        }
    }

    #[test]
    fn threads_do_not_change_the_answer() {
        let i = inst(complete(5), &[0, 2]).with_weights(vec![3, 1, 4, 1, 5]);
        let nice = nice_of(&i);
        let one = solve_with(&i, &nice, Mode::Soct, &SolveOptions { threads: 1 }).unwrap();
        let four = solve_with(&i, &nice, Mode::Soct, &SolveOptions { threads: 4 }).unwrap();
        assert_eq!(one.kept_set, four.kept_set);
        assert_eq!(one.stats.max_classes, four.stats.max_classes);
    }
}
