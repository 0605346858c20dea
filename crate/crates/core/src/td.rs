//! Tree decompositions: the PACE `.td` format, axiom checking, elimination
//! heuristics and conversion to nice form.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

use fixedbitset::FixedBitSet;

use crate::graph::{Graph, UnionFind, VertexId, VertexSet};

/// An unrooted tree decomposition. Bags are sorted; `edges` index into `bags`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<VertexId>>,
    pub edges: Vec<(usize, usize)>,
    /// Vertex count of the decomposed graph, as declared in the header.
    pub n_vertices: usize,
}

impl TreeDecomposition {
    /// Largest bag size minus one; 0 for a decomposition without vertices.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// Serialises to PACE 2017 `.td` text with 1-indexed vertices.
    pub fn to_td_string(&self) -> String {
        let mut out = String::new();
        let max_bag = self.bags.iter().map(Vec::len).max().unwrap_or(0);
        let _ = writeln!(out, "s td {} {} {}", self.bags.len(), max_bag, self.n_vertices);
        for (i, bag) in self.bags.iter().enumerate() {
            let _ = write!(out, "b {}", i + 1);
            for &v in bag {
                let _ = write!(out, " {}", v + 1);
            }
            out.push('\n');
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "{} {}", a + 1, b + 1);
        }
        out
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TdError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid decomposition: {0}")]
    Invalid(TdViolation),
}

fn parse_err(line: usize, msg: impl Into<String>) -> TdError {
    TdError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Reads PACE 2017 `.td` text.
pub fn load_td(text: &str) -> Result<TreeDecomposition, TdError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<VertexId>>> = Vec::new();
    let mut edges = Vec::new();
    let mut uf = UnionFind::new(0);
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let raw = raw.trim();
        if raw.is_empty() || raw.starts_with('c') {
            continue;
        }
        let mut toks = raw.split_whitespace();
        let first = toks.next().unwrap();
        let num = |t: &str| -> Result<usize, TdError> {
            t.parse::<usize>()
                .map_err(|_| parse_err(line, format!("expected a number, found `{t}`")))
        };
        match first {
            "s" => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate header"));
                }
                let rest: Vec<&str> = toks.collect();
                if rest.len() != 4 || rest[0] != "td" {
                    return Err(parse_err(line, "malformed header, expected `s td <bags> <width+1> <n>`"));
                }
                let nb = num(rest[1])?;
                let w = num(rest[2])?;
                let n = num(rest[3])?;
                header = Some((nb, w, n));
                bags = vec![None; nb];
                uf = UnionFind::new(nb);
            }
            "b" => {
                let (nb, w, n) = header.ok_or_else(|| parse_err(line, "bag before header"))?;
                let id = num(toks.next().ok_or_else(|| parse_err(line, "missing bag id"))?)?;
                if id == 0 || id > nb {
                    return Err(parse_err(line, format!("bag id {id} out of range 1..={nb}")));
                }
                if bags[id - 1].is_some() {
                    return Err(parse_err(line, format!("bag {id} defined twice")));
                }
                let mut bag = Vec::new();
                for t in toks {
                    let v = num(t)?;
                    if v == 0 || v > n {
                        return Err(parse_err(line, format!("vertex {v} out of range 1..={n}")));
                    }
                    bag.push(v - 1);
                }
                bag.sort_unstable();
                bag.dedup();
                if bag.len() > w {
                    return Err(parse_err(line, format!("bag {id} has {} vertices, header allows {w}", bag.len())));
                }
                bags[id - 1] = Some(bag);
            }
            _ => {
                let (nb, _, _) = header.ok_or_else(|| parse_err(line, "tree edge before header"))?;
                let a = num(first)?;
                let b = num(toks.next().ok_or_else(|| parse_err(line, "tree edge needs two endpoints"))?)?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after tree edge"));
                }
                if a == 0 || a > nb || b == 0 || b > nb {
                    return Err(parse_err(line, format!("tree edge {a} {b} references a missing bag")));
                }
                if !uf.union(a - 1, b - 1) {
                    return Err(parse_err(line, format!("tree edge {a} {b} closes a cycle")));
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    let (nb, _, n) = header.ok_or_else(|| parse_err(last_line.max(1), "missing header"))?;
    if nb > 0 && edges.len() != nb - 1 {
        return Err(parse_err(
            last_line.max(1),
            format!("{} tree edges for {nb} bags; the bags do not form a tree", edges.len()),
        ));
    }
    Ok(TreeDecomposition {
        bags: bags.into_iter().map(Option::unwrap_or_default).collect(),
        edges,
        n_vertices: n,
    })
}

/// First violated decomposition axiom, with a witness. Vertices are 0-indexed
/// internally and printed 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TdViolation {
    NotATree,
    VertexCountMismatch { graph: usize, declared: usize },
    VertexOutOfRange(VertexId),
    VertexUncovered(VertexId),
    EdgeUncovered(VertexId, VertexId),
    OccurrencesDisconnected(VertexId),
}

impl fmt::Display for TdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TdViolation::NotATree => write!(f, "decomposition tree is not a tree"),
            TdViolation::VertexCountMismatch { graph, declared } => {
                write!(f, "graph has {graph} vertices but decomposition declares {declared}")
            }
            TdViolation::VertexOutOfRange(v) => write!(f, "bag vertex {} out of range", v + 1),
            TdViolation::VertexUncovered(v) => write!(f, "vertex {} is in no bag", v + 1),
            TdViolation::EdgeUncovered(u, v) => {
                write!(f, "edge {}-{} is not covered by any bag", u + 1, v + 1)
            }
            TdViolation::OccurrencesDisconnected(v) => {
                write!(f, "bags containing vertex {} are not connected", v + 1)
            }
        }
    }
}

impl std::error::Error for TdViolation {}

/// Checks the three decomposition axioms (plus tree shape) against `graph`.
pub fn validate_td(graph: &Graph, td: &TreeDecomposition) -> Result<(), TdViolation> {
    let nb = td.bags.len();
    let n = graph.n();
    if td.n_vertices != n {
        return Err(TdViolation::VertexCountMismatch {
            graph: n,
            declared: td.n_vertices,
        });
    }
    if nb == 0 {
        return if n == 0 {
            Ok(())
        } else {
            Err(TdViolation::VertexUncovered(0))
        };
    }
    let mut uf = UnionFind::new(nb);
    if td.edges.len() != nb - 1
        || td
            .edges
            .iter()
            .any(|&(a, b)| a >= nb || b >= nb || !uf.union(a, b))
    {
        return Err(TdViolation::NotATree);
    }

    let mut occurrences = vec![0usize; n];
    for bag in &td.bags {
        for &v in bag {
            if v >= n {
                return Err(TdViolation::VertexOutOfRange(v));
            }
            occurrences[v] += 1;
        }
    }
    if let Some(v) = (0..n).find(|&v| occurrences[v] == 0) {
        return Err(TdViolation::VertexUncovered(v));
    }

    // bag membership lists per vertex, for the edge check
    let mut bags_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            bags_of[v].push(i);
        }
    }
    for (u, v) in graph.edges() {
        let covered = bags_of[u]
            .iter()
            .any(|&b| td.bags[b].binary_search(&v).is_ok());
        if !covered {
            return Err(TdViolation::EdgeUncovered(u, v));
        }
    }

    // In a tree, the nodes holding v induce a connected subtree iff they
    // span exactly (count - 1) tree edges.
    let mut inner_edges = vec![0usize; n];
    for &(a, b) in &td.edges {
        let (x, y) = (&td.bags[a], &td.bags[b]);
        let (mut i, mut j) = (0, 0);
        while i < x.len() && j < y.len() {
            match x[i].cmp(&y[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    inner_edges[x[i]] += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    if let Some(v) = (0..n).find(|&v| inner_edges[v] + 1 != occurrences[v]) {
        return Err(TdViolation::OccurrencesDisconnected(v));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rule {
    MinDegree,
    MinFill,
}

/// Fill-in is only counted exactly below this degree; above it the pair
/// count is used as an upper estimate.
const EXACT_FILL_DEGREE: usize = 64;

fn fill_in(adj: &[HashSet<VertexId>], v: VertexId) -> usize {
    let d = adj[v].len();
    if d > EXACT_FILL_DEGREE {
        return d * (d - 1) / 2;
    }
    let ns: Vec<VertexId> = adj[v].iter().copied().collect();
    let mut missing = 0;
    for i in 0..ns.len() {
        for j in i + 1..ns.len() {
            if !adj[ns[i]].contains(&ns[j]) {
                missing += 1;
            }
        }
    }
    missing
}

/// Eliminates vertices greedily and returns the order together with the
/// neighbourhood of each vertex at its elimination time.
fn eliminate(graph: &Graph, rule: Rule) -> (Vec<VertexId>, Vec<Vec<VertexId>>) {
    let n = graph.n();
    let mut adj: Vec<HashSet<VertexId>> = (0..n)
        .map(|v| graph.neighbors(v).iter().copied().collect())
        .collect();
    let score = |adj: &[HashSet<VertexId>], v: VertexId| match rule {
        Rule::MinDegree => adj[v].len(),
        Rule::MinFill => fill_in(adj, v),
    };
    let mut current: Vec<usize> = (0..n).map(|v| score(&adj, v)).collect();
    // ties broken by degree then id
    let mut heap: BinaryHeap<Reverse<(usize, usize, VertexId)>> = (0..n)
        .map(|v| Reverse((current[v], adj[v].len(), v)))
        .collect();
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut nbhd = vec![Vec::new(); n];
    while let Some(Reverse((s, d, v))) = heap.pop() {
        if done[v] || s != current[v] || d != adj[v].len() {
            continue;
        }
        done[v] = true;
        order.push(v);
        let mut ns: Vec<VertexId> = adj[v].iter().copied().collect();
        ns.sort_unstable();
        for &a in &ns {
            adj[a].remove(&v);
        }
        for i in 0..ns.len() {
            for j in i + 1..ns.len() {
                adj[ns[i]].insert(ns[j]);
                adj[ns[j]].insert(ns[i]);
            }
        }
        let mut touched: Vec<VertexId> = ns.clone();
        if rule == Rule::MinFill {
            for &a in &ns {
                touched.extend(adj[a].iter().copied());
            }
            touched.sort_unstable();
            touched.dedup();
        }
        for &a in &touched {
            if !done[a] {
                current[a] = score(&adj, a);
                heap.push(Reverse((current[a], adj[a].len(), a)));
            }
        }
        nbhd[v] = ns;
    }
    (order, nbhd)
}

/// Builds a decomposition from an elimination order: one bag per vertex,
/// attached to the earliest-eliminated later neighbour; bags contained in
/// their parent are merged away.
fn decomposition_from_order(
    n: usize,
    order: &[VertexId],
    nbhd: &[Vec<VertexId>],
) -> TreeDecomposition {
    if n == 0 {
        return TreeDecomposition::default();
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut bag: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut parent: Vec<Option<VertexId>> = vec![None; n];
    for &v in order {
        let mut b = nbhd[v].clone();
        b.push(v);
        b.sort_unstable();
        bag[v] = b;
        parent[v] = nbhd[v].iter().copied().min_by_key(|&u| pos[u]);
    }
    // Merge a bag into its parent when it adds nothing; process from the
    // end of the order so parents are final before children look at them.
    let mut alias: Vec<VertexId> = (0..n).collect();
    let mut keep = vec![true; n];
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            let p = alias[p];
            let subset = bag[v].iter().all(|x| bag[p].binary_search(x).is_ok());
            if subset {
                keep[v] = false;
                alias[v] = p;
            }
        }
    }
    let mut id = vec![usize::MAX; n];
    let mut bags = Vec::new();
    for &v in order.iter().rev() {
        if keep[v] {
            id[v] = bags.len();
            bags.push(bag[v].clone());
        }
    }
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for &v in order.iter().rev() {
        if !keep[v] {
            continue;
        }
        match parent[v] {
            Some(p) => edges.push((id[alias[p]], id[v])),
            None => roots.push(id[v]),
        }
    }
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    edges.sort_unstable();
    TreeDecomposition {
        bags,
        edges,
        n_vertices: n,
    }
}

/// Best of the min-fill and min-degree elimination heuristics (min-fill wins
/// ties). The result always satisfies the decomposition axioms.
pub fn heuristic_td(graph: &Graph) -> TreeDecomposition {
    let (o1, n1) = eliminate(graph, Rule::MinFill);
    let fill = decomposition_from_order(graph.n(), &o1, &n1);
    let (o2, n2) = eliminate(graph, Rule::MinDegree);
    let degree = decomposition_from_order(graph.n(), &o2, &n2);
    if degree.width() < fill.width() {
        degree
    } else {
        fill
    }
}

/// Decomposition for a fixed elimination order, for callers that have one.
pub fn td_from_elimination_order(graph: &Graph, order: &[VertexId]) -> TreeDecomposition {
    let n = graph.n();
    let mut adj: Vec<HashSet<VertexId>> = (0..n)
        .map(|v| graph.neighbors(v).iter().copied().collect())
        .collect();
    let mut nbhd = vec![Vec::new(); n];
    for &v in order {
        let mut ns: Vec<VertexId> = adj[v].iter().copied().collect();
        ns.sort_unstable();
        for &a in &ns {
            adj[a].remove(&v);
        }
        for i in 0..ns.len() {
            for j in i + 1..ns.len() {
                adj[ns[i]].insert(ns[j]);
                adj[ns[j]].insert(ns[i]);
            }
        }
        nbhd[v] = ns;
    }
    decomposition_from_order(n, order, &nbhd)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NiceKind {
    Leaf,
    Introduce(VertexId),
    Forget(VertexId),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NiceKind,
    /// Sorted bag.
    pub bag: Vec<VertexId>,
    pub children: Vec<usize>,
}

/// A rooted nice tree decomposition. Nodes are stored children-first, so a
/// forward scan visits every child before its parent; the root is last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
    pub n_vertices: usize,
}

impl NiceTreeDecomposition {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn width(&self) -> usize {
        self.nodes
            .iter()
            .map(|t| t.bag.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    /// For every node `t`, the vertices introduced somewhere in the subtree
    /// rooted at `t`, i.e. `V(G_t)`.
    pub fn subtree_vertices(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = Vec::with_capacity(self.nodes.len());
        for t in &self.nodes {
            let mut set = FixedBitSet::with_capacity(self.n_vertices);
            for &c in &t.children {
                set.union_with(&out[c]);
            }
            for &v in &t.bag {
                set.insert(v);
            }
            out.push(set);
        }
        out
    }

    /// Forgets the rooting and the node kinds.
    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let mut edges = Vec::new();
        for (i, t) in self.nodes.iter().enumerate() {
            for &c in &t.children {
                edges.push((c, i));
            }
        }
        TreeDecomposition {
            bags: self.nodes.iter().map(|t| t.bag.clone()).collect(),
            edges,
            n_vertices: self.n_vertices,
        }
    }

    /// Checks node-kind shape rules: empty leaves and root, one-vertex
    /// introduce/forget steps, joins over identical bags.
    pub fn check_shape(&self) -> Result<(), String> {
        for (i, t) in self.nodes.iter().enumerate() {
            let child_bag = |k: usize| &self.nodes[t.children[k]].bag;
            let ok = match t.kind {
                NiceKind::Leaf => t.children.is_empty() && t.bag.is_empty(),
                NiceKind::Introduce(v) => {
                    t.children.len() == 1 && {
                        let c = child_bag(0);
                        c.binary_search(&v).is_err()
                            && t.bag.len() == c.len() + 1
                            && t.bag.iter().all(|x| *x == v || c.binary_search(x).is_ok())
                    }
                }
                NiceKind::Forget(v) => {
                    t.children.len() == 1 && {
                        let c = child_bag(0);
                        c.binary_search(&v).is_ok()
                            && c.len() == t.bag.len() + 1
                            && c.iter().all(|x| *x == v || t.bag.binary_search(x).is_ok())
                    }
                }
                NiceKind::Join => {
                    t.children.len() == 2 && *child_bag(0) == t.bag && *child_bag(1) == t.bag
                }
            };
            if !ok {
                return Err(format!("node {i} ({:?}) violates its shape rule", t.kind));
            }
            if t.children.iter().any(|&c| c >= i) {
                return Err(format!("node {i} is stored before one of its children"));
            }
        }
        match self.nodes.last() {
            Some(r) if r.bag.is_empty() => Ok(()),
            Some(_) => Err("root bag is not empty".into()),
            None => Err("no nodes".into()),
        }
    }
}

struct NiceBuilder {
    nodes: Vec<NiceNode>,
}

impl NiceBuilder {
    fn push(&mut self, kind: NiceKind, bag: Vec<VertexId>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode {
            kind,
            bag,
            children,
        });
        self.nodes.len() - 1
    }

    /// Leaf followed by introductions of `bag` in ascending order.
    fn fresh_chain(&mut self, bag: &[VertexId]) -> usize {
        let mut top = self.push(NiceKind::Leaf, Vec::new(), Vec::new());
        for i in 0..bag.len() {
            top = self.push(NiceKind::Introduce(bag[i]), bag[..=i].to_vec(), vec![top]);
        }
        top
    }

    /// Forgets what `target` lacks, then introduces what it adds, ascending.
    fn morph(&mut self, mut top: usize, target: &[VertexId]) -> usize {
        let mut bag = self.nodes[top].bag.clone();
        let drop: Vec<VertexId> = bag
            .iter()
            .copied()
            .filter(|v| target.binary_search(v).is_err())
            .collect();
        for v in drop {
            bag.retain(|&x| x != v);
            top = self.push(NiceKind::Forget(v), bag.clone(), vec![top]);
        }
        for &v in target {
            if let Err(pos) = bag.binary_search(&v) {
                bag.insert(pos, v);
                top = self.push(NiceKind::Introduce(v), bag.clone(), vec![top]);
            }
        }
        top
    }
}

/// Converts a valid decomposition into nice form of the same width, rooted at
/// bag 0 and closed off with forget nodes until the root bag is empty.
///
/// A bag whose only child carries the identical bag keeps a branch of its
/// own, so the pair meets at a join node.
pub fn nicify(td: &TreeDecomposition, graph: &Graph) -> Result<NiceTreeDecomposition, TdError> {
    validate_td(graph, td).map_err(TdError::Invalid)?;
    let mut b = NiceBuilder { nodes: Vec::new() };
    if td.bags.is_empty() {
        b.push(NiceKind::Leaf, Vec::new(), Vec::new());
        return Ok(NiceTreeDecomposition {
            nodes: b.nodes,
            n_vertices: td.n_vertices,
        });
    }
    let adj = td.adjacency();
    // iterative DFS from bag 0 to get parents and a post-order
    let nb = td.bags.len();
    let mut parent = vec![usize::MAX; nb];
    let mut order = Vec::with_capacity(nb);
    let mut stack = vec![0usize];
    let mut seen = vec![false; nb];
    seen[0] = true;
    while let Some(t) = stack.pop() {
        order.push(t);
        for &c in &adj[t] {
            if !seen[c] {
                seen[c] = true;
                parent[c] = t;
                stack.push(c);
            }
        }
    }
    let mut top = vec![usize::MAX; nb];
    for &t in order.iter().rev() {
        let bag = &td.bags[t];
        let children: Vec<usize> = adj[t].iter().copied().filter(|&c| parent[c] == t && c != 0).collect();
        let mut branches: Vec<usize> = children.iter().map(|&c| b.morph(top[c], bag)).collect();
        if branches.is_empty() {
            top[t] = b.fresh_chain(bag);
            continue;
        }
        if branches.len() == 1 && td.bags[children[0]] == *bag {
            branches.push(b.fresh_chain(bag));
        }
        let mut acc = branches[0];
        for &other in &branches[1..] {
            acc = b.push(NiceKind::Join, bag.clone(), vec![acc, other]);
        }
        top[t] = acc;
    }
    b.morph(top[0], &[]);
    Ok(NiceTreeDecomposition {
        nodes: b.nodes,
        n_vertices: td.n_vertices,
    })
}
