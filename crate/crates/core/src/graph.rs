//! Undirected simple graphs with deletion-problem labels, plus the block
//! machinery every solver in this crate is built on: biconnected components,
//! block-cut trees, subset-bipartiteness and path parities.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Dense vertex index in `0..n`.
pub type VertexId = usize;

/// Vertex set over a fixed universe `0..n`.
pub type VertexSet = FixedBitSet;

/// Normalised undirected edge `(min, max)`.
pub type Edge = (VertexId, VertexId);

#[inline]
pub fn edge_key(u: VertexId, v: VertexId) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A vertex set of size `n` containing every vertex.
pub fn full_set(n: usize) -> VertexSet {
    let mut s = FixedBitSet::with_capacity(n);
    s.insert_range(..);
    s
}

/// Builds a vertex set over `0..n` from a list of members.
pub fn set_of(n: usize, members: impl IntoIterator<Item = VertexId>) -> VertexSet {
    let mut s = FixedBitSet::with_capacity(n);
    for v in members {
        s.insert(v);
    }
    s
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {0} out of range (n = {1})")]
    OutOfRange(VertexId, usize),
}

/// Simple undirected graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        let n = self.adj.len();
        if u >= n {
            return Err(GraphError::OutOfRange(u, n));
        }
        if v >= n {
            return Err(GraphError::OutOfRange(v, n));
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => return Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => self.adj[u].insert(pos, v),
        }
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.edge_count += 1;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// The induced subgraph on `keep`, renumbered densely. Returns the graph
    /// and the old id of every new vertex.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<VertexId>) {
        let old: Vec<VertexId> = keep.ones().collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let mut g = Graph::new(old.len());
        for (u, v) in self.edges() {
            if keep.contains(u) && keep.contains(v) {
                g.adj[new_id[u]].push(new_id[v]);
                g.adj[new_id[v]].push(new_id[u]);
                g.edge_count += 1;
            }
        }
        for ns in &mut g.adj {
            ns.sort_unstable();
        }
        (g, old)
    }
}

/// The deletion problems handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    /// Subset Feedback Vertex Set.
    Sfvs,
    /// Subset Odd Cycle Transversal.
    Soct,
    /// Even Cycle Transversal.
    Ect,
    /// Node Multiway Cut.
    Nmc,
    /// (Edge) Multiway Cut.
    Mwc,
    /// Restricted Edge-Subset Feedback Edge Set.
    Resfes,
}

impl Problem {
    pub const ALL: [Problem; 6] = [
        Problem::Sfvs,
        Problem::Soct,
        Problem::Ect,
        Problem::Nmc,
        Problem::Mwc,
        Problem::Resfes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Problem::Sfvs => "sfvs",
            Problem::Soct => "soct",
            Problem::Ect => "ect",
            Problem::Nmc => "nmc",
            Problem::Mwc => "mwc",
            Problem::Resfes => "resfes",
        }
    }

    /// Whether solutions are edge sets rather than vertex sets.
    pub fn deletes_edges(self) -> bool {
        matches!(self, Problem::Mwc | Problem::Resfes)
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Problem::ALL
            .iter()
            .copied()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown problem `{s}`"))
    }
}

/// A graph together with every label any of the problems needs.
///
/// Vertex weights are deletion costs. `forced_keep` vertices may never be
/// deleted; they stand in for vertices of unbounded weight. Edge weights are
/// only read by the edge-deletion problems and default to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledInstance {
    pub graph: Graph,
    pub weights: Vec<u64>,
    pub edge_weights: BTreeMap<Edge, u64>,
    pub s_vertices: VertexSet,
    pub terminals: VertexSet,
    pub s_edges: BTreeSet<Edge>,
    pub forced_keep: VertexSet,
    pub problem: Problem,
    pub budget: u64,
}

impl LabeledInstance {
    /// Unit weights, empty label sets, budget 0.
    pub fn new(graph: Graph, problem: Problem) -> Self {
        let n = graph.n();
        LabeledInstance {
            graph,
            weights: vec![1; n],
            edge_weights: BTreeMap::new(),
            s_vertices: FixedBitSet::with_capacity(n),
            terminals: FixedBitSet::with_capacity(n),
            s_edges: BTreeSet::new(),
            forced_keep: FixedBitSet::with_capacity(n),
            problem,
            budget: 0,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn with_s(mut self, s: impl IntoIterator<Item = VertexId>) -> Self {
        for v in s {
            self.s_vertices.insert(v);
        }
        self
    }

    pub fn with_terminals(mut self, t: impl IntoIterator<Item = VertexId>) -> Self {
        for v in t {
            self.terminals.insert(v);
        }
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_weights(mut self, weights: Vec<u64>) -> Self {
        assert_eq!(weights.len(), self.n());
        self.weights = weights;
        self
    }

    pub fn edge_weight(&self, u: VertexId, v: VertexId) -> u64 {
        self.edge_weights.get(&edge_key(u, v)).copied().unwrap_or(1)
    }

    pub fn weight_of(&self, set: &VertexSet) -> u64 {
        set.ones().map(|v| self.weights[v]).sum()
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// Checks the label invariants: `s_edges` are edges and weight vectors
    /// have the right length.
    pub fn check(&self) -> Result<(), String> {
        if self.weights.len() != self.n() {
            return Err("weight vector length differs from vertex count".into());
        }
        for &(u, v) in &self.s_edges {
            if u >= self.n() || v >= self.n() || !self.graph.has_edge(u, v) {
                return Err(format!("S-edge {}-{} is not an edge", u + 1, v + 1));
            }
        }
        for &(u, v) in self.edge_weights.keys() {
            if u >= self.n() || v >= self.n() || !self.graph.has_edge(u, v) {
                return Err(format!("weighted pair {}-{} is not an edge", u + 1, v + 1));
            }
        }
        Ok(())
    }
}

/// Blocks and cut vertices of an induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BlockCutTree {
    /// Vertex sets of the blocks, each sorted, ordered lexicographically.
    pub blocks: Vec<Vec<VertexId>>,
    /// Sorted cut vertices.
    pub cut_vertices: Vec<VertexId>,
    /// For every block, the cut vertices it contains.
    pub block_cuts: Vec<Vec<VertexId>>,
}

impl BlockCutTree {
    /// Block-to-cut-vertex incidences; the edges of the block-cut forest.
    pub fn incidence(&self) -> impl Iterator<Item = (usize, VertexId)> + '_ {
        self.block_cuts
            .iter()
            .enumerate()
            .flat_map(|(b, cs)| cs.iter().map(move |&c| (b, c)))
    }
}

/// Biconnected components of `G[members]`, restricted to the components that
/// contain at least one of `roots`. Isolated vertices are singleton blocks.
/// Blocks come back unsorted, in discovery order.
pub(crate) fn raw_blocks(
    graph: &Graph,
    members: &VertexSet,
    roots: impl IntoIterator<Item = VertexId>,
) -> Vec<Vec<VertexId>> {
    const UNSEEN: u32 = u32::MAX;
    let n = graph.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut time = 0u32;
    let mut vstack: Vec<VertexId> = Vec::new();
    // (vertex, parent, next neighbor index)
    let mut call: Vec<(VertexId, VertexId, usize)> = Vec::new();
    let mut blocks = Vec::new();

    for root in roots {
        if !members.contains(root) || disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if !graph.neighbors(root).iter().any(|&w| members.contains(w)) {
            blocks.push(vec![root]);
            continue;
        }
        vstack.push(root);
        call.push((root, usize::MAX, 0));
        while let Some(&mut (v, parent, ref mut next)) = call.last_mut() {
            let ns = graph.neighbors(v);
            if *next < ns.len() {
                let w = ns[*next];
                *next += 1;
                if !members.contains(w) || w == parent {
                    continue;
                }
                if disc[w] == UNSEEN {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    vstack.push(w);
                    call.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                call.pop();
                if let Some(&(p, _, _)) = call.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = vec![p];
                        loop {
                            let x = vstack.pop().expect("vertex stack underflow");
                            block.push(x);
                            if x == v {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                } else {
                    vstack.pop();
                }
            }
        }
    }
    blocks
}

/// Block-cut tree of `G[subset]`.
pub fn block_cut_tree(graph: &Graph, subset: &VertexSet) -> BlockCutTree {
    let mut blocks = raw_blocks(graph, subset, subset.ones());
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort();
    let mut count = vec![0u32; graph.n()];
    for b in &blocks {
        for &v in b {
            count[v] += 1;
        }
    }
    let cut_vertices: Vec<VertexId> = subset.ones().filter(|&v| count[v] > 1).collect();
    let block_cuts = blocks
        .iter()
        .map(|b| b.iter().copied().filter(|&v| count[v] > 1).collect())
        .collect();
    BlockCutTree {
        blocks,
        cut_vertices,
        block_cuts,
    }
}

/// Number of edges of `G` with both endpoints in `block`.
pub(crate) fn block_edge_count(graph: &Graph, block: &[VertexId], mark: &VertexSet) -> usize {
    block
        .iter()
        .map(|&v| graph.neighbors(v).iter().filter(|&&w| mark.contains(w)).count())
        .sum::<usize>()
        / 2
}

/// Two-colours the block `block` (whose members are marked in `mark`).
/// Writes colours into `color` and returns whether the block is bipartite.
pub(crate) fn color_block(
    graph: &Graph,
    block: &[VertexId],
    mark: &VertexSet,
    color: &mut [u8],
) -> bool {
    const NONE: u8 = 2;
    for &v in block {
        color[v] = NONE;
    }
    let mut bipartite = true;
    let mut queue = Vec::with_capacity(block.len());
    let start = block[0];
    color[start] = 0;
    queue.push(start);
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for &w in graph.neighbors(v) {
            if !mark.contains(w) {
                continue;
            }
            if color[w] == NONE {
                color[w] = color[v] ^ 1;
                queue.push(w);
            } else if color[w] == color[v] {
                bipartite = false;
            }
        }
    }
    bipartite
}

fn any_block(graph: &Graph, subset: &VertexSet, mut pred: impl FnMut(&[VertexId], &VertexSet) -> bool) -> bool {
    let mut mark = FixedBitSet::with_capacity(graph.n());
    for block in raw_blocks(graph, subset, subset.ones()) {
        for &v in &block {
            mark.insert(v);
        }
        let hit = pred(&block, &mark);
        for &v in &block {
            mark.set(v, false);
        }
        if hit {
            return true;
        }
    }
    false
}

/// True iff `G[subset]` has no odd cycle through a vertex of `s`, decided
/// block by block: every block either avoids `s` or is bipartite.
pub fn is_s_bipartite(graph: &Graph, subset: &VertexSet, s: &VertexSet) -> bool {
    let mut color = vec![0u8; graph.n()];
    !any_block(graph, subset, |block, mark| {
        block.len() >= 3
            && block.iter().any(|&v| s.contains(v))
            && !color_block(graph, block, mark, &mut color)
    })
}

/// True iff `G[subset]` has a cycle through a vertex of `s`, i.e. some block
/// with at least three vertices meets `s`.
pub fn has_s_traversing_cycle(graph: &Graph, subset: &VertexSet, s: &VertexSet) -> bool {
    any_block(graph, subset, |block, _| {
        block.len() >= 3 && block.iter().any(|&v| s.contains(v))
    })
}

/// True iff `G[subset]` contains an even cycle. A 2-connected graph with at
/// least three vertices avoids even cycles only when it is an odd cycle.
pub fn has_even_cycle(graph: &Graph, subset: &VertexSet) -> bool {
    any_block(graph, subset, |block, mark| {
        if block.len() < 3 {
            return false;
        }
        let m = block_edge_count(graph, block, mark);
        m > block.len() || block.len() % 2 == 0
    })
}

/// Parity of the paths between two vertices of an induced subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathParity {
    Disconnected,
    Even,
    Odd,
    Both,
}

/// Path parities for unordered vertex pairs, keyed by `edge_key(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ParityTable {
    pub entries: BTreeMap<(VertexId, VertexId), PathParity>,
}

impl ParityTable {
    pub fn get(&self, u: VertexId, v: VertexId) -> Option<PathParity> {
        self.entries.get(&edge_key(u, v)).copied()
    }
}

/// Component labels of `G[subset]` and of the union of its bipartite blocks,
/// together with a proper 2-colouring of the latter.
pub(crate) struct ParityOracle {
    comp: Vec<u32>,
    bip_comp: Vec<u32>,
    color: Vec<u8>,
}

impl ParityOracle {
    /// `blocks` must be the blocks of `G[subset]` restricted to the components
    /// of interest, `bipartite[i]` whether block `i` is bipartite.
    pub(crate) fn new(graph: &Graph, blocks: &[Vec<VertexId>], bipartite: &[bool]) -> Self {
        let n = graph.n();
        let mut uf = UnionFind::new(n);
        let mut bip_comp = vec![u32::MAX; n];
        let mut color = vec![0u8; n];
        let mut mark = FixedBitSet::with_capacity(n);
        // Edges of the union of bipartite blocks. That union is bipartite, so
        // a single BFS colouring gives every parity at once.
        let mut bip_adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for (b, &bip) in blocks.iter().zip(bipartite) {
            for w in b.windows(2) {
                uf.union(w[0], w[1]);
            }
            if !bip {
                continue;
            }
            for &v in b {
                mark.insert(v);
            }
            for &v in b {
                let entry = bip_adj.entry(v).or_default();
                entry.extend(graph.neighbors(v).iter().copied().filter(|&w| mark.contains(w)));
            }
            for &v in b {
                mark.set(v, false);
            }
        }
        let starts: Vec<VertexId> = bip_adj.keys().copied().collect();
        for s in starts {
            if bip_comp[s] != u32::MAX {
                continue;
            }
            bip_comp[s] = s as u32;
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &bip_adj[&v] {
                    if bip_comp[w] == u32::MAX {
                        bip_comp[w] = s as u32;
                        color[w] = color[v] ^ 1;
                        stack.push(w);
                    }
                }
            }
        }
        let comp = (0..n).map(|v| uf.find(v) as u32).collect();
        ParityOracle {
            comp,
            bip_comp,
            color,
        }
    }

    pub(crate) fn parity(&self, u: VertexId, v: VertexId) -> PathParity {
        if self.comp[u] != self.comp[v] {
            PathParity::Disconnected
        } else if self.bip_comp[u] == u32::MAX || self.bip_comp[u] != self.bip_comp[v] {
            PathParity::Both
        } else if self.color[u] == self.color[v] {
            PathParity::Even
        } else {
            PathParity::Odd
        }
    }
}

/// Parities of all paths between each requested pair inside `G[subset]`.
///
/// A pair is `Both` when a non-bipartite block lies on its block-cut path;
/// otherwise every path has the parity given by a bipartition of the union of
/// bipartite blocks.
pub fn pair_parities(
    graph: &Graph,
    subset: &VertexSet,
    pairs: &[(VertexId, VertexId)],
) -> ParityTable {
    let blocks = raw_blocks(graph, subset, subset.ones());
    let mut mark = FixedBitSet::with_capacity(graph.n());
    let mut color = vec![0u8; graph.n()];
    let bipartite: Vec<bool> = blocks
        .iter()
        .map(|b| {
            for &v in b {
                mark.insert(v);
            }
            let bip = color_block(graph, b, &mark, &mut color);
            for &v in b {
                mark.set(v, false);
            }
            bip
        })
        .collect();
    let oracle = ParityOracle::new(graph, &blocks, &bipartite);
    let entries = pairs
        .iter()
        .filter(|(u, v)| u != v)
        .map(|&(u, v)| (edge_key(u, v), oracle.parity(u, v)))
        .collect();
    ParityTable { entries }
}

/// Plain union-find with path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    /// Two triangles sharing vertex 0.
    pub fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        let mut g = Graph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::Loop(1)));
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(1, 0), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(g.add_edge(0, 3), Err(GraphError::OutOfRange(3, 3)));
    }

    #[test]
    fn triangle_is_one_block() {
        let g = complete(3);
        let t = block_cut_tree(&g, &full_set(3));
        assert_eq!(t.blocks, vec![vec![0, 1, 2]]);
        assert!(t.cut_vertices.is_empty());
    }

    #[test]
    fn path_blocks_are_edges() {
        let g = path(3);
        let t = block_cut_tree(&g, &full_set(3));
        assert_eq!(t.blocks, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(t.cut_vertices, vec![1]);
    }

    #[test]
    fn bowtie_incidence_is_a_path() {
        let g = bowtie();
        let t = block_cut_tree(&g, &full_set(5));
        assert_eq!(t.blocks, vec![vec![0, 1, 2], vec![0, 3, 4]]);
        assert_eq!(t.cut_vertices, vec![0]);
        let inc: Vec<_> = t.incidence().collect();
        assert_eq!(inc, vec![(0, 0), (1, 0)]);
    }

    #[test]
    fn empty_and_isolated() {
        let g = Graph::new(3);
        assert!(block_cut_tree(&g, &FixedBitSet::with_capacity(3)).blocks.is_empty());
        let t = block_cut_tree(&g, &full_set(3));
        assert_eq!(t.blocks, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn subset_bipartite_examples() {
        let tri = complete(3);
        assert!(!is_s_bipartite(&tri, &full_set(3), &set_of(3, [0])));
        let c4 = cycle(4);
        assert!(is_s_bipartite(&c4, &full_set(4), &full_set(4)));
        let mut pendant = complete(3);
        pendant.add_vertex();
        pendant.add_edge(2, 3).unwrap();
        assert!(is_s_bipartite(&pendant, &full_set(4), &set_of(4, [3])));
    }

    #[test]
    fn s_traversing_examples() {
        assert!(has_s_traversing_cycle(&complete(3), &full_set(3), &set_of(3, [0])));
        let tree = Graph::from_edges(5, [(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert!(!has_s_traversing_cycle(&tree, &full_set(5), &full_set(5)));
        assert!(has_s_traversing_cycle(&bowtie(), &full_set(5), &set_of(5, [0])));
    }

    #[test]
    fn even_cycle_examples() {
        assert!(!has_even_cycle(&cycle(5), &full_set(5)));
        assert!(has_even_cycle(&cycle(4), &full_set(4)));
        assert!(has_even_cycle(&complete(4), &full_set(4)));
    }

    #[test]
    fn parity_examples() {
        let p = path(3);
        let t = pair_parities(&p, &full_set(3), &[(0, 2)]);
        assert_eq!(t.get(0, 2), Some(PathParity::Even));
        let tri = complete(3);
        let t = pair_parities(&tri, &full_set(3), &[(0, 1)]);
        assert_eq!(t.get(1, 0), Some(PathParity::Both));
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let t = pair_parities(&two, &full_set(4), &[(0, 3)]);
        assert_eq!(t.get(0, 3), Some(PathParity::Disconnected));
    }

    #[test]
    fn parity_through_triangle_and_tail() {
        // 3 - 0 - {0,1,2 triangle}: pair (3, 1) passes a non-bipartite block
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 0), (3, 4)]).unwrap();
        let t = pair_parities(&g, &full_set(5), &[(3, 1), (4, 0), (4, 3)]);
        assert_eq!(t.get(3, 1), Some(PathParity::Both));
        assert_eq!(t.get(4, 0), Some(PathParity::Even));
        assert_eq!(t.get(4, 3), Some(PathParity::Odd));
    }
}
