//! Multiway cut constructions: node multiway cut from the independent set
//! problem, and edge multiway cut from the permutation clique problem.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::generic::{base, base_id};
use super::{Builder, Cell, GadgetError, GadgetMeta, GeneratedInstance, GridProblemInstance, GridVariant};
use crate::graph::{edge_key, Edge, Graph, LabeledInstance, Problem, VertexId};
use crate::oracle::Deletion;
use crate::td::{heuristic_td, TreeDecomposition};

/// Node multiway cut instance with `k + 2` terminals and budget `2(k-1)km`.
pub fn construct_nmc_lb(h: &GridProblemInstance) -> Result<GeneratedInstance, GadgetError> {
    if h.variant != GridVariant::IndependentSet {
        return Err(GadgetError::WrongVariant {
            problem: Problem::Nmc,
            expected: GridVariant::IndependentSet,
            got: h.variant,
        });
    }
    h.check()?;
    let (k, m) = (h.k, h.edges.len());
    if k < 2 || m == 0 {
        return Err(GadgetError::Unsatisfiable("need k >= 2 and at least one edge".into()));
    }
    let mut b = base(k, m);
    for p in 0..m {
        for j in 0..k {
            for i in 0..k {
                for i2 in i + 1..k {
                    for z in 0..2 {
                        for z2 in 0..2 {
                            b.edge(base_id(k, p, i, j, z), base_id(k, p, i2, j, z2));
                        }
                    }
                }
            }
        }
    }
    let t = b.vertex("t".into(), false);
    let t2 = b.vertex("t'".into(), false);
    let rows: Vec<VertexId> = (0..k).map(|i| b.vertex(format!("r{}", i + 1), false)).collect();
    let cols: Vec<VertexId> = (0..k).map(|j| b.vertex(format!("c{}", j + 1), false)).collect();
    let mut near_t = FixedBitSet::with_capacity(2 * k * k * m);
    for (p, &(a, c)) in h.edges.iter().enumerate() {
        let va = base_id(k, p, a.0, a.1, 1);
        let vc = base_id(k, p, c.0, c.1, 1);
        b.edge(va, vc);
        b.edge(t, va);
        b.edge(t2, vc);
        near_t.insert(va);
        near_t.insert(vc);
    }
    for p in 0..m {
        for i in 0..k {
            for j in 0..k {
                for z in 0..2 {
                    let v = base_id(k, p, i, j, z);
                    if !near_t.contains(v) {
                        b.edge(rows[i], v);
                    }
                }
                b.edge(cols[j], base_id(k, p, i, j, 0));
            }
        }
    }
    let budget = (2 * (k - 1) * k * m) as u64;
    let planted = h.planted.as_ref().map(|cells| {
        let base_len = 2 * k * k * m;
        let mut keep = FixedBitSet::with_capacity(base_len);
        for p in 0..m {
            for &(i, j) in cells {
                keep.insert(base_id(k, p, i, j, 0));
                keep.insert(base_id(k, p, i, j, 1));
            }
        }
        Deletion::Vertices((0..base_len).filter(|&v| !keep.contains(v)).collect())
    });
    let mut terminals = vec![t, t2];
    terminals.extend(&rows);
    let instance = LabeledInstance::new(b.graph, Problem::Nmc)
        .with_terminals(terminals)
        .with_budget(budget);
    let witness = heuristic_td(&instance.graph);
    let meta = GadgetMeta {
        problem: Problem::Nmc,
        k,
        m,
        budget,
        gadgets: Vec::new(),
        width_factor: None,
        witness_width: Some(witness.width()),
        mwc: None,
    };
    Ok(GeneratedInstance {
        instance,
        planted,
        witness: Some(witness),
        meta,
        names: b.names,
        layout: None,
    })
}

/// Numeric parameters of the multiway cut construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MwcParameters {
    pub k: usize,
    /// Edges of the source instance.
    pub mu: usize,
    /// Maximum degree of the source instance.
    pub delta_max: usize,
    /// Edge count of the degree-padded source graph.
    pub m: usize,
    pub h: u64,
    pub k_prime: u64,
}

/// `h = 12m - kΔ - C(k,2)` and `k' = (h+1)(k-1)k(μ+k²) + h`.
pub fn mwc_parameters(k: usize, delta_max: usize, mu: usize, m: usize) -> Result<MwcParameters, GadgetError> {
    let h = 12 * m as i64 - (k * delta_max) as i64 - (k * (k - 1) / 2) as i64;
    if h < 0 {
        return Err(GadgetError::Unsatisfiable(format!("h = {h} is negative")));
    }
    let h = h as u64;
    let k_prime = (h + 1) * ((k - 1) * k * (mu + k * k)) as u64 + h;
    Ok(MwcParameters {
        k,
        mu,
        delta_max,
        m,
        h,
        k_prime,
    })
}

/// The construction before weighted edges are expanded.
struct WeightedCut {
    builder: Builder,
    terminals: Vec<VertexId>,
    weighted: Vec<(VertexId, VertexId, u64)>,
    /// Indices into `weighted` of a planted cut.
    planted: Option<Vec<usize>>,
    params: MwcParameters,
}

fn build_weighted(h: &GridProblemInstance) -> Result<WeightedCut, GadgetError> {
    if h.variant != GridVariant::PermutationClique {
        return Err(GadgetError::WrongVariant {
            problem: Problem::Mwc,
            expected: GridVariant::PermutationClique,
            got: h.variant,
        });
    }
    h.check()?;
    let k = h.k;
    let mu = h.edges.len();
    if k < 2 || mu == 0 {
        return Err(GadgetError::Unsatisfiable("need k >= 2 and at least one edge".into()));
    }
    let mut degree: BTreeMap<Cell, usize> = BTreeMap::new();
    for &(a, c) in &h.edges {
        *degree.entry(a).or_default() += 1;
        *degree.entry(c).or_default() += 1;
    }
    let delta_max = degree.values().copied().max().unwrap_or(0);
    let deficit = |cell: Cell| delta_max - degree.get(&cell).copied().unwrap_or(0);
    // Padding every cell to degree Δ with pendant edges gives k²Δ - μ edges.
    let params = mwc_parameters(k, delta_max, mu, k * k * delta_max - mu)?;
    let (hh, kp) = (params.h, params.k_prime);

    let copies = mu + k * k;
    let mut b = Builder::default();
    let v = |p: usize, i: usize, j: usize| (p * k + i) * k + j;
    for p in 0..copies {
        for i in 0..k {
            for j in 0..k {
                b.vertex(format!("v{}.{}.{}", p + 1, i + 1, j + 1), false);
            }
        }
    }
    let rows: Vec<VertexId> = (0..k).map(|i| b.vertex(format!("r{}", i + 1), false)).collect();
    let t = b.vertex("t".into(), false);
    let cols: Vec<VertexId> = (0..k).map(|j| b.vertex(format!("c{}", j + 1), false)).collect();
    let mut weighted = Vec::new();
    let mut planted = Vec::new();
    let chosen = h.planted.as_ref();
    let in_c = |cell: Cell| chosen.is_some_and(|c| c.contains(&cell));
    let add = |weighted: &mut Vec<(VertexId, VertexId, u64)>, a, c, w| {
        weighted.push((a, c, w));
        weighted.len() - 1
    };
    for p in 0..copies {
        for i in 0..k {
            for j in 0..k {
                let e = add(&mut weighted, rows[i], v(p, i, j), hh + 1);
                if !in_c((i, j)) {
                    planted.push(e);
                }
                add(&mut weighted, cols[j], v(p, i, j), kp + 1);
            }
        }
    }
    for (p, &(a, c)) in h.edges.iter().enumerate() {
        let tag = format!("edge{}", p + 1);
        let ends = [
            b.vertex(format!("{tag}.a"), false),
            b.vertex(format!("{tag}.x"), false),
            b.vertex(format!("{tag}.z"), false),
            b.vertex(format!("{tag}.y"), false),
            b.vertex(format!("{tag}.b"), false),
        ];
        let [ea, x, z, y, eb] = ends;
        let ax = add(&mut weighted, ea, x, 5);
        let xz = add(&mut weighted, x, z, 3);
        let zy = add(&mut weighted, z, y, 3);
        let yb = add(&mut weighted, y, eb, 5);
        let xy = add(&mut weighted, x, y, 3);
        let av = add(&mut weighted, ea, v(p, a.0, a.1), 3);
        let ar = add(&mut weighted, ea, rows[a.0], 3);
        let bv = add(&mut weighted, eb, v(p, c.0, c.1), 3);
        let br = add(&mut weighted, eb, rows[c.0], 3);
        add(&mut weighted, z, t, kp + 1);
        planted.extend(match (in_c(a), in_c(c)) {
            (false, false) => vec![av, ar, bv, br],
            (true, false) => vec![ax, bv, br],
            (false, true) => vec![yb, av, ar],
            (true, true) => vec![xz, zy, xy],
        });
    }
    for j in 0..k {
        for i in 0..k {
            let d = deficit((i, j)) as u64;
            if d == 0 {
                continue;
            }
            let p = mu + i + j * k;
            let w = b.vertex(format!("eq{}.{}.w", i + 1, j + 1), false);
            let wt = add(&mut weighted, w, t, 11 * d);
            let wv = add(&mut weighted, w, v(p, i, j), 6 * d);
            let wr = add(&mut weighted, w, rows[i], 6 * d);
            if in_c((i, j)) {
                planted.push(wt);
            } else {
                planted.extend([wv, wr]);
            }
        }
    }
    let mut terminals = rows;
    terminals.push(t);
    Ok(WeightedCut {
        builder: b,
        terminals,
        weighted,
        planted: chosen.map(|_| planted),
        params,
    })
}

fn mwc_meta(params: MwcParameters, budget: u64, witness: &TreeDecomposition) -> GadgetMeta {
    GadgetMeta {
        problem: Problem::Mwc,
        k: params.k,
        m: params.mu,
        budget,
        gadgets: Vec::new(),
        width_factor: None,
        witness_width: Some(witness.width()),
        mwc: Some(params),
    }
}

/// Multiway cut instance with `k + 1` terminals and unit edge weights: an
/// edge of weight `w` becomes `w` internally disjoint paths of length 2.
pub fn construct_mwc_lb(h: &GridProblemInstance) -> Result<GeneratedInstance, GadgetError> {
    let WeightedCut {
        mut builder,
        terminals,
        weighted,
        planted,
        params,
    } = build_weighted(h)?;
    let compact = {
        let mut g = Graph::new(builder.graph.n());
        for &(a, c, _) in &weighted {
            g.add_edge(a, c).expect("weighted pairs are distinct");
        }
        g
    };
    let mut first_edges: Vec<Vec<Edge>> = Vec::with_capacity(weighted.len());
    let mut middles: Vec<(VertexId, VertexId, VertexId)> = Vec::new();
    for &(a, c, w) in &weighted {
        let mut firsts = Vec::new();
        for l in 0..w {
            let name = format!("{}~{}.{}", builder.names[a], builder.names[c], l + 1);
            let x = builder.path2(a, c, name);
            firsts.push(edge_key(a, x));
            middles.push((a, c, x));
        }
        first_edges.push(firsts);
    }
    let budget = params.k_prime;
    let planted = planted.map(|idx| Deletion::Edges(idx.iter().flat_map(|&e| first_edges[e].clone()).collect()));
    let instance = LabeledInstance::new(builder.graph, Problem::Mwc)
        .with_terminals(terminals)
        .with_budget(budget);
    let witness = expand_witness(&heuristic_td(&compact), &middles, instance.n());
    Ok(GeneratedInstance {
        meta: mwc_meta(params, budget, &witness),
        instance,
        planted,
        witness: Some(witness),
        names: builder.names,
        layout: None,
    })
}

/// The same construction with weighted edges kept as edge weights.
pub fn construct_mwc_lb_weighted(h: &GridProblemInstance) -> Result<GeneratedInstance, GadgetError> {
    let WeightedCut {
        mut builder,
        terminals,
        weighted,
        planted,
        params,
    } = build_weighted(h)?;
    for &(a, c, _) in &weighted {
        builder.edge(a, c);
    }
    let budget = params.k_prime;
    let planted =
        planted.map(|idx| Deletion::Edges(idx.iter().map(|&e| edge_key(weighted[e].0, weighted[e].1)).collect()));
    let mut instance = LabeledInstance::new(builder.graph, Problem::Mwc)
        .with_terminals(terminals)
        .with_budget(budget);
    instance.edge_weights = weighted.iter().map(|&(a, c, w)| (edge_key(a, c), w)).collect();
    let witness = heuristic_td(&instance.graph);
    Ok(GeneratedInstance {
        meta: mwc_meta(params, budget, &witness),
        instance,
        planted,
        witness: Some(witness),
        names: builder.names,
        layout: None,
    })
}

/// Hangs a bag `{a, c, x}` for each middle vertex `x` of an `a c` path off
/// a bag of `td` containing both `a` and `c`.
fn expand_witness(td: &TreeDecomposition, middles: &[(VertexId, VertexId, VertexId)], n: usize) -> TreeDecomposition {
    let mut cover: BTreeMap<Edge, usize> = BTreeMap::new();
    for (i, bag) in td.bags.iter().enumerate() {
        for (x, &a) in bag.iter().enumerate() {
            for &c in &bag[x + 1..] {
                cover.entry((a, c)).or_insert(i);
            }
        }
    }
    let mut out = td.clone();
    out.n_vertices = n;
    for &(a, c, x) in middles {
        let host = cover[&edge_key(a, c)];
        let mut bag = vec![a, c, x];
        bag.sort_unstable();
        out.bags.push(bag);
        out.edges.push((host, out.bags.len() - 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::gadgets::gen_grid_instance;
    use crate::graph::set_of;
    use crate::oracle::{brute_solve_with, edge_deletion_ok, vertex_deletion_ok, OracleLimits};
    use crate::td::validate_td;

    #[test]
    fn nmc_shape_and_planted_cut() {
        for k in 2..5 {
            let h = gen_grid_instance(k, 3, GridVariant::IndependentSet, k as u64, true).unwrap();
            let g = construct_nmc_lb(&h).unwrap();
            assert_eq!(g.instance.terminals.count_ones(..), k + 2);
            assert_eq!(g.instance.n(), 2 * k * k * 3 + 2 * k + 2);
            let Some(Deletion::Vertices(del)) = &g.planted else { panic!() };
            assert_eq!(del.len() as u64, g.instance.budget);
            assert!(vertex_deletion_ok(&g.instance, &set_of(g.instance.n(), del.iter().copied())));
            validate_td(&g.instance.graph, g.witness.as_ref().unwrap()).unwrap();
        }
    }

    #[test]
    fn nmc_smallest_case_by_brute_force() {
        let h = gen_grid_instance(2, 1, GridVariant::IndependentSet, 3, true).unwrap();
        let g = construct_nmc_lb(&h).unwrap();
        assert_eq!(g.instance.budget, 4);
        let limits = OracleLimits {
            weight_cap: Some(4),
            ..OracleLimits::default()
        };
        let r = brute_solve_with(&g.instance, &limits).unwrap();
        assert!(r.optimum_weight <= 4);
    }

    #[test]
    fn parameter_arithmetic() {
        let p = mwc_parameters(2, 1, 1, 4).unwrap();
        assert_eq!((p.h, p.k_prime), (45, 505));
        assert!(mwc_parameters(5, 20, 1, 1).is_err());
    }

    fn planted_weight(g: &GeneratedInstance) -> u64 {
        let Some(Deletion::Edges(del)) = &g.planted else { panic!() };
        del.iter().map(|&(a, c)| g.instance.edge_weight(a, c)).sum()
    }

    #[test]
    fn mwc_planted_cut_costs_exactly_the_budget() {
        for (k, mu, seed) in [(2, 1, 0), (2, 2, 1), (3, 3, 2), (3, 7, 3)] {
            let h = gen_grid_instance(k, mu, GridVariant::PermutationClique, seed, true).unwrap();
            let w = construct_mwc_lb_weighted(&h).unwrap();
            let p = w.meta.mwc.unwrap();
            assert_eq!(planted_weight(&w), p.k_prime, "k={k} mu={mu}");
            let Some(Deletion::Edges(del)) = &w.planted else { panic!() };
            assert!(edge_deletion_ok(&w.instance, &del.iter().copied().collect::<BTreeSet<_>>()));
            validate_td(&w.instance.graph, w.witness.as_ref().unwrap()).unwrap();
        }
    }

    #[test]
    fn expanded_form_matches_the_weighted_one() {
        let h = gen_grid_instance(2, 1, GridVariant::PermutationClique, 5, true).unwrap();
        let g = construct_mwc_lb(&h).unwrap();
        let p = g.meta.mwc.unwrap();
        assert_eq!((p.m, p.h, p.k_prime), (3, 33, 373));
        assert_eq!(planted_weight(&g), p.k_prime);
        let Some(Deletion::Edges(del)) = &g.planted else { panic!() };
        assert!(edge_deletion_ok(&g.instance, &del.iter().copied().collect::<BTreeSet<_>>()));
        assert!(g.instance.edge_weights.is_empty());
        assert_eq!(g.instance.terminals.count_ones(..), 3);
        validate_td(&g.instance.graph, g.witness.as_ref().unwrap()).unwrap();
    }

    #[test]
    fn variant_checks() {
        let is = gen_grid_instance(2, 1, GridVariant::IndependentSet, 0, true).unwrap();
        assert!(construct_mwc_lb(&is).is_err());
        let pc = gen_grid_instance(2, 1, GridVariant::PermutationClique, 0, true).unwrap();
        assert!(construct_nmc_lb(&pc).is_err());
    }
}
