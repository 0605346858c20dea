use proptest::prelude::*;

use twdp::dp::{solve_sfvs, solve_soct};
use twdp::format::{deletion_is_valid, load_instance, serialize_instance};
use twdp::graph::{edge_key, full_set, is_s_bipartite, set_of, Graph, LabeledInstance, Problem};
use twdp::oracle::{brute_solve, vertex_deletion_ok};
use twdp::reductions::solve_via_reduction;
use twdp::td::{heuristic_td, load_td, nicify, validate_td};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

fn labeled(max_n: usize, problem: Problem) -> impl Strategy<Value = LabeledInstance> {
    graph(max_n).prop_flat_map(move |g| {
        let n = g.n();
        (
            Just(g),
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec(1u64..=5, n),
        )
            .prop_map(move |(g, s, w)| {
                let s: Vec<usize> = (0..s.len()).filter(|&v| s[v]).collect();
                LabeledInstance::new(g, problem).with_s(s).with_weights(w)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn soct_matches_brute_force(inst in labeled(9, Problem::Soct)) {
        let nice = nicify(&heuristic_td(&inst.graph), &inst.graph).unwrap();
        let dp = solve_soct(&inst, &nice).unwrap();
        prop_assert_eq!(dp.deletion_weight, brute_solve(&inst).unwrap().optimum_weight);
        prop_assert!(vertex_deletion_ok(&inst, &dp.deletion_set));
    }

    #[test]
    fn sfvs_matches_brute_force(inst in labeled(9, Problem::Sfvs)) {
        let nice = nicify(&heuristic_td(&inst.graph), &inst.graph).unwrap();
        let dp = solve_sfvs(&inst, &nice).unwrap();
        prop_assert_eq!(dp.deletion_weight, brute_solve(&inst).unwrap().optimum_weight);
        prop_assert_eq!(dp.deletion_weight + dp.max_weight, inst.total_weight());
    }

    #[test]
    fn nicify_keeps_width_and_validity(g in graph(16)) {
        let td = heuristic_td(&g);
        prop_assert!(validate_td(&g, &td).is_ok());
        let nice = nicify(&td, &g).unwrap();
        prop_assert_eq!(nice.width(), td.width());
        prop_assert!(nice.check_shape().is_ok());
        prop_assert!(validate_td(&g, &nice.to_tree_decomposition()).is_ok());
    }

    #[test]
    fn td_text_round_trips(g in graph(12)) {
        let td = heuristic_td(&g);
        prop_assert_eq!(load_td(&td.to_td_string()).unwrap(), td);
    }

    #[test]
    fn instance_text_round_trips(inst in labeled(10, Problem::Soct), budget in 0u64..20) {
        let mut inst = inst.with_budget(budget);
        inst.forced_keep.extend(inst.s_vertices.ones().take(1));
        prop_assert_eq!(load_instance(&serialize_instance(&inst)).unwrap(), inst);
    }

    #[test]
    fn s_bipartiteness_is_hereditary(inst in labeled(9, Problem::Soct), drop in any::<u16>()) {
        let n = inst.n();
        let all = full_set(n);
        let part = set_of(n, (0..n).filter(|&v| drop >> v & 1 == 0));
        if is_s_bipartite(&inst.graph, &all, &inst.s_vertices) {
            prop_assert!(is_s_bipartite(&inst.graph, &part, &inst.s_vertices));
        }
    }

    #[test]
    fn multiway_cut_pull_back_is_a_cut(g in graph(7), weights in proptest::collection::vec(1u64..=3, 21)) {
        prop_assume!(g.n() >= 3 && g.edge_count() <= 16);
        let mut inst = LabeledInstance::new(g, Problem::Mwc).with_terminals([0, 1, 2]);
        for (e, w) in inst.graph.edges().collect::<Vec<_>>().into_iter().zip(weights) {
            inst.edge_weights.insert(edge_key(e.0, e.1), w);
        }
        let solved = solve_via_reduction(&inst, None, &Default::default()).unwrap();
        prop_assert!(deletion_is_valid(&inst, &solved.deletion));
        prop_assert_eq!(solved.optimum_weight, brute_solve(&inst).unwrap().optimum_weight);
    }
}
