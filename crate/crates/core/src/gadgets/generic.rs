//! The common frame for Subset FVS, Subset OCT and Even Cycle Transversal:
//! `m` copies of a doubled `k × k` grid, one copy per edge of the source
//! instance, wired together by four families of gadgets.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::{Builder, Cell, GadgetError, GadgetKind, GadgetMeta, GeneratedInstance, GridProblemInstance, GridVariant};
use crate::graph::{LabeledInstance, Problem, VertexId};
use crate::oracle::Deletion;
use crate::td::TreeDecomposition;

/// Every witness decomposition has width at most this many times `k`.
pub const WITNESS_WIDTH_FACTOR: usize = 32;

/// Gadget variants `[column, row, edge, propagation]` used for `problem`.
pub fn wiring(problem: Problem) -> Result<[u8; 4], GadgetError> {
    match problem {
        Problem::Sfvs => Ok([1, 1, 1, 1]),
        Problem::Soct => Ok([1, 2, 1, 2]),
        Problem::Ect => Ok([2, 1, 2, 3]),
        other => Err(GadgetError::Unsupported(other)),
    }
}

/// Vertex groups of a generated instance, used to lay out the witness.
#[derive(Debug, Clone)]
pub(crate) struct Layout {
    pub m: usize,
    /// `columns[p][j]`: the column vertices of copy `p` with their selector.
    pub columns: Vec<Vec<Vec<VertexId>>>,
    /// All row selector vertices of copy `p`.
    pub rows: Vec<Vec<VertexId>>,
    pub edges: Vec<Vec<VertexId>>,
    /// Columns touched by the edge gadget of copy `p`.
    pub edge_columns: Vec<(usize, usize)>,
    /// Propagation vertices between copies `p` and `p + 1`, except those
    /// hanging off a single grid vertex.
    pub interface: Vec<Vec<VertexId>>,
    /// `(vertex, grid neighbour)` for the remaining propagation vertices.
    pub pendants: Vec<Vec<(VertexId, VertexId)>>,
    pub base_len: usize,
}

pub(crate) fn base_id(k: usize, p: usize, i: usize, j: usize, z: usize) -> VertexId {
    ((p * k + i) * k + j) * 2 + z
}

/// The `2k²m` grid vertices `v_p(i, j, z)`, with no edges.
pub(crate) fn base(k: usize, m: usize) -> Builder {
    let mut b = Builder::default();
    for p in 0..m {
        for i in 0..k {
            for j in 0..k {
                for z in 0..2 {
                    let v = b.vertex(format!("v{}.{}.{}.{}", p + 1, i + 1, j + 1, z + 1), false);
                    debug_assert_eq!(v, base_id(k, p, i, j, z));
                }
            }
        }
    }
    b
}

fn no_variant(kind: GadgetKind, variant: u8) -> GadgetError {
    GadgetError::NoSuchVariant { kind, variant }
}

/// Column selector on column `j` of copy `p`. Also makes the column a
/// clique minus its `k` homologous pairs.
pub(crate) fn add_column_selector(
    b: &mut Builder,
    k: usize,
    p: usize,
    j: usize,
    variant: u8,
) -> Result<Vec<VertexId>, GadgetError> {
    if !(1..=2).contains(&variant) {
        return Err(no_variant(GadgetKind::ColumnSelector, variant));
    }
    let v = |i, z| base_id(k, p, i, j, z);
    for i in 0..k {
        for i2 in 0..k {
            if i != i2 {
                for z in 0..2 {
                    for z2 in 0..2 {
                        b.edge(v(i, z), v(i2, z2));
                    }
                }
            }
        }
    }
    let tag = format!("col{}.{}", p + 1, j + 1);
    let mut out = Vec::new();
    let twins = if variant == 2 { k + 1 } else { k };
    for z in 0..2 {
        for d in 0..twins {
            let x = b.vertex(format!("{tag}.d{}.{}", d + 1, z + 1), true);
            for i in 0..k {
                b.edge(x, v(i, z));
            }
            out.push(x);
        }
    }
    for i in 0..k {
        let d = b.vertex(format!("{tag}.d{}", i + 1), true);
        out.push(d);
        for i2 in 0..k {
            if i2 != i {
                b.edge(d, v(i2, 1));
            }
        }
        if variant == 1 {
            b.edge(d, v(i, 0));
        } else {
            out.push(b.path2(d, v(i, 0), format!("{tag}.w{}", i + 1)));
        }
    }
    Ok(out)
}

/// Row selector on row `i` of copy `p`.
pub(crate) fn add_row_selector(
    b: &mut Builder,
    k: usize,
    p: usize,
    i: usize,
    variant: u8,
) -> Result<Vec<VertexId>, GadgetError> {
    let tag = format!("row{}.{}", p + 1, i + 1);
    let out = match variant {
        1 => vec![
            b.vertex(format!("{tag}.r"), true),
            b.vertex(format!("{tag}.r'"), true),
        ],
        2 => {
            let r = b.vertex(format!("{tag}.r"), false);
            let r1 = b.vertex(format!("{tag}.r'"), true);
            let r2 = b.vertex(format!("{tag}.r''"), false);
            b.edge(r, r2);
            vec![r, r1, r2]
        }
        other => return Err(no_variant(GadgetKind::RowSelector, other)),
    };
    for &x in &out {
        for j in 0..k {
            b.edge(x, base_id(k, p, i, j, 0));
        }
    }
    Ok(out)
}

/// Edge gadget for the grid edge `a c` on copy `p`.
pub(crate) fn add_edge_gadget(
    b: &mut Builder,
    k: usize,
    p: usize,
    a: Cell,
    c: Cell,
    variant: u8,
) -> Result<Vec<VertexId>, GadgetError> {
    if !(1..=2).contains(&variant) {
        return Err(no_variant(GadgetKind::Edge, variant));
    }
    let va = base_id(k, p, a.0, a.1, 0);
    let vc = base_id(k, p, c.0, c.1, 0);
    b.edge(va, vc);
    let s = b.vertex(format!("edge{}.s", p + 1), true);
    b.edge(s, va);
    let mut out = vec![s];
    if variant == 1 {
        b.edge(s, vc);
    } else {
        out.push(b.path2(s, vc, format!("edge{}.w", p + 1)));
    }
    Ok(out)
}

/// Propagation gadget between copies `p` and `p + 1`. Returns the interface
/// vertices and the subdivision vertices with their grid neighbour.
pub(crate) fn add_propagation(
    b: &mut Builder,
    k: usize,
    p: usize,
    variant: u8,
) -> Result<(Vec<VertexId>, Vec<(VertexId, VertexId)>), GadgetError> {
    if !(1..=3).contains(&variant) {
        return Err(no_variant(GadgetKind::Propagation, variant));
    }
    let tag = format!("prop{}", p + 1);
    let rows: Vec<VertexId> = (0..k).map(|i| b.vertex(format!("{tag}.r{}", i + 1), false)).collect();
    let cols: Vec<VertexId> = (0..k).map(|j| b.vertex(format!("{tag}.c{}", j + 1), false)).collect();
    let hub = b.vertex(format!("{tag}.c"), true);
    let mut pendants = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let lower = base_id(k, p, i, j, 1);
            let upper = base_id(k, p + 1, i, j, 0);
            if variant == 1 {
                b.edge(rows[i], lower);
            } else {
                let w = b.path2(rows[i], lower, format!("{tag}.w{}.{}", i + 1, j + 1));
                pendants.push((w, lower));
            }
            b.edge(rows[i], upper);
            b.edge(cols[j], lower);
            b.edge(cols[j], upper);
        }
    }
    let mut interface: Vec<VertexId> = rows.iter().chain(&cols).copied().collect();
    interface.push(hub);
    for (j, &c) in cols.iter().enumerate() {
        b.edge(hub, c);
        if variant == 3 {
            let c2 = b.vertex(format!("{tag}.c{}'", j + 1), false);
            b.edge(c2, c);
            b.edge(c2, hub);
            interface.push(c2);
        }
    }
    Ok((interface, pendants))
}

/// Builds the lower-bound instance of `problem` from a permutation
/// independent set instance. The budget is `2(k-1)km`; a planted solution
/// of the source yields a deletion of exactly that size.
pub fn construct_lb_instance(problem: Problem, h: &GridProblemInstance) -> Result<GeneratedInstance, GadgetError> {
    let [cv, rv, ev, pv] = wiring(problem)?;
    if h.variant != GridVariant::PermutationIndependentSet {
        return Err(GadgetError::WrongVariant {
            problem,
            expected: GridVariant::PermutationIndependentSet,
            got: h.variant,
        });
    }
    h.check()?;
    let (k, m) = (h.k, h.edges.len());
    if k < 2 || m == 0 {
        return Err(GadgetError::Unsatisfiable("need k >= 2 and at least one edge".into()));
    }
    let mut b = base(k, m);
    let mut layout = Layout {
        m,
        columns: vec![Vec::new(); m],
        rows: vec![Vec::new(); m],
        edges: Vec::new(),
        edge_columns: Vec::new(),
        interface: Vec::new(),
        pendants: Vec::new(),
        base_len: 2 * k * k * m,
    };
    for p in 0..m {
        for j in 0..k {
            let mut group: Vec<VertexId> = (0..k)
                .flat_map(|i| [base_id(k, p, i, j, 0), base_id(k, p, i, j, 1)])
                .collect();
            group.extend(add_column_selector(&mut b, k, p, j, cv)?);
            layout.columns[p].push(group);
        }
        for i in 0..k {
            let r = add_row_selector(&mut b, k, p, i, rv)?;
            layout.rows[p].extend(r);
        }
        let (a, c) = h.edges[p];
        layout.edges.push(add_edge_gadget(&mut b, k, p, a, c, ev)?);
        layout.edge_columns.push((a.1, c.1));
    }
    for p in 0..m - 1 {
        let (interface, pendants) = add_propagation(&mut b, k, p, pv)?;
        layout.interface.push(interface);
        layout.pendants.push(pendants);
    }
    let budget = (2 * (k - 1) * k * m) as u64;
    let planted = h.planted.as_ref().map(|cells| {
        let mut keep = FixedBitSet::with_capacity(layout.base_len);
        for p in 0..m {
            for &(i, j) in cells {
                keep.insert(base_id(k, p, i, j, 0));
                keep.insert(base_id(k, p, i, j, 1));
            }
        }
        Deletion::Vertices((0..layout.base_len).filter(|&v| !keep.contains(v)).collect())
    });
    let instance = LabeledInstance::new(b.graph, problem)
        .with_s(b.s)
        .with_budget(budget);
    let witness = layout_witness(&layout, instance.n());
    let meta = GadgetMeta {
        problem,
        k,
        m,
        budget,
        gadgets: vec![
            (GadgetKind::ColumnSelector, cv),
            (GadgetKind::RowSelector, rv),
            (GadgetKind::Edge, ev),
            (GadgetKind::Propagation, pv),
        ],
        width_factor: Some(WITNESS_WIDTH_FACTOR),
        witness_width: Some(witness.width()),
        mwc: None,
    };
    Ok(GeneratedInstance {
        instance,
        planted,
        witness: Some(witness),
        meta,
        names: b.names,
        layout: Some(layout),
    })
}

/// A path decomposition of a generated instance. For the grid-of-copies
/// constructions it is laid out copy by copy with width at most
/// `WITNESS_WIDTH_FACTOR * k`; otherwise the stored witness is returned.
pub fn witness_path_decomposition(generated: &GeneratedInstance) -> Result<TreeDecomposition, GadgetError> {
    match (&generated.layout, &generated.witness) {
        (Some(layout), _) => Ok(layout_witness(layout, generated.instance.n())),
        (None, Some(w)) => Ok(w.clone()),
        (None, None) => Err(GadgetError::NoLayout),
    }
}

/// Copy `p` is covered by bags that all contain the propagation interfaces
/// on both sides, the row selectors, the edge gadget and the two columns it
/// touches; the other columns come and go one at a time. A subdivision
/// vertex gets its own bag right after its grid neighbour first appears.
fn layout_witness(layout: &Layout, n: usize) -> TreeDecomposition {
    let mut hanging: HashMap<VertexId, Vec<VertexId>> = HashMap::new();
    for &(w, v) in layout.pendants.iter().flatten() {
        hanging.entry(v).or_default().push(w);
    }
    let mut seen = FixedBitSet::with_capacity(layout.base_len);
    let mut bags: Vec<Vec<VertexId>> = Vec::new();
    let mut emit = |bag: Vec<VertexId>, bags: &mut Vec<Vec<VertexId>>| {
        let mut sorted = bag;
        sorted.sort_unstable();
        sorted.dedup();
        let mut extra = Vec::new();
        for &v in &sorted {
            if v < layout.base_len && !seen.put(v) {
                extra.extend(hanging.get(&v).into_iter().flatten().copied());
            }
        }
        bags.push(sorted.clone());
        for w in extra {
            let mut b = sorted.clone();
            b.push(w);
            b.sort_unstable();
            bags.push(b);
        }
    };
    for p in 0..layout.m {
        let (j1, j2) = layout.edge_columns[p];
        let mut core: Vec<VertexId> = Vec::new();
        if p > 0 {
            core.extend(&layout.interface[p - 1]);
        }
        if p + 1 < layout.m {
            core.extend(&layout.interface[p]);
        }
        core.extend(&layout.rows[p]);
        core.extend(&layout.edges[p]);
        core.extend(&layout.columns[p][j1]);
        core.extend(&layout.columns[p][j2]);
        emit(core.clone(), &mut bags);
        for (j, col) in layout.columns[p].iter().enumerate() {
            if j != j1 && j != j2 {
                let mut bag = core.clone();
                bag.extend(col);
                emit(bag, &mut bags);
            }
        }
    }
    let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
    TreeDecomposition {
        bags,
        edges,
        n_vertices: n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::gen_grid_instance;
    use crate::graph::{has_even_cycle, has_s_traversing_cycle, is_s_bipartite, set_of};
    use crate::oracle::vertex_deletion_ok;
    use crate::td::validate_td;

    fn h(k: usize, m: usize, seed: u64) -> GridProblemInstance {
        gen_grid_instance(k, m, GridVariant::PermutationIndependentSet, seed, true).unwrap()
    }

    #[test]
    fn sizes_for_the_smallest_instances() {
        // Base 8, column selectors 2 * 6, row selectors 2 * 2, edge gadget 1.
        let g = construct_lb_instance(Problem::Sfvs, &h(2, 1, 0)).unwrap();
        assert_eq!(g.instance.n(), 25);
        assert_eq!(g.instance.budget, 4);
        let g = construct_lb_instance(Problem::Sfvs, &h(2, 2, 0)).unwrap();
        // Two copies plus a propagation gadget of 2k + 1 vertices.
        assert_eq!(g.instance.n(), 55);
        assert_eq!(g.instance.budget, 8);
    }

    #[test]
    fn planted_deletions_are_legal_and_tight() {
        for problem in [Problem::Sfvs, Problem::Soct, Problem::Ect] {
            for (k, m, seed) in [(2, 1, 1), (2, 3, 2), (3, 4, 3), (4, 6, 4)] {
                let g = construct_lb_instance(problem, &h(k, m, seed)).unwrap();
                let Some(Deletion::Vertices(del)) = &g.planted else { panic!() };
                assert_eq!(del.len() as u64, g.instance.budget);
                let set = set_of(g.instance.n(), del.iter().copied());
                assert!(vertex_deletion_ok(&g.instance, &set), "{problem} k={k} m={m}");
            }
        }
    }

    #[test]
    fn dropping_a_planted_vertex_breaks_legality() {
        // Keeping a second pair in some column recreates an obstruction.
        for problem in [Problem::Sfvs, Problem::Soct, Problem::Ect] {
            let g = construct_lb_instance(problem, &h(3, 2, 9)).unwrap();
            let Some(Deletion::Vertices(del)) = &g.planted else { panic!() };
            let set = set_of(g.instance.n(), del[1..].iter().copied());
            let keep = {
                let mut all = crate::graph::full_set(g.instance.n());
                all.difference_with(&set);
                all
            };
            let bad = match problem {
                Problem::Sfvs => has_s_traversing_cycle(&g.instance.graph, &keep, &g.instance.s_vertices),
                Problem::Soct => !is_s_bipartite(&g.instance.graph, &keep, &g.instance.s_vertices),
                _ => has_even_cycle(&g.instance.graph, &keep),
            };
            assert!(bad, "{problem}");
        }
    }

    #[test]
    fn witness_is_a_valid_narrow_path_decomposition() {
        for problem in [Problem::Sfvs, Problem::Soct, Problem::Ect] {
            for (k, m, seed) in [(2, 1, 5), (2, 4, 6), (3, 5, 7), (5, 8, 8)] {
                let g = construct_lb_instance(problem, &h(k, m, seed)).unwrap();
                let w = witness_path_decomposition(&g).unwrap();
                validate_td(&g.instance.graph, &w).unwrap();
                assert!(w.edges.iter().all(|&(a, b)| b == a + 1));
                assert!(w.width() <= WITNESS_WIDTH_FACTOR * k, "{problem} k={k}: {}", w.width());
            }
        }
    }

    #[test]
    fn rejects_other_variants_and_problems() {
        let clique = gen_grid_instance(2, 1, GridVariant::PermutationClique, 0, true).unwrap();
        assert!(matches!(
            construct_lb_instance(Problem::Sfvs, &clique),
            Err(GadgetError::WrongVariant { .. })
        ));
        assert_eq!(
            construct_lb_instance(Problem::Nmc, &h(2, 1, 0)).unwrap_err(),
            GadgetError::Unsupported(Problem::Nmc)
        );
    }

    #[test]
    fn deterministic_addressing() {
        let a = construct_lb_instance(Problem::Ect, &h(3, 3, 11)).unwrap();
        let b = construct_lb_instance(Problem::Ect, &h(3, 3, 11)).unwrap();
        assert_eq!(a.instance, b.instance);
        assert_eq!(a.names, b.names);
        assert_eq!(a.names[base_id(3, 1, 2, 0, 1)], "v2.3.1.2");
    }
}
