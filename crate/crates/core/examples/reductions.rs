// Node Multiway Cut, Restricted Edge-Subset FVS and Edge Multiway Cut,
// each solved by reducing to weighted Subset FVS.

use std::error::Error;

use twdp::dp::SolveOptions;
use twdp::graph::{edge_key, Graph, LabeledInstance, Problem};
use twdp::oracle::brute_solve;
use twdp::reductions::{nmc_to_wsfvs, solve_via_reduction};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = Graph::from_edges(
        7,
        [(0, 3), (1, 3), (3, 4), (4, 2), (4, 5), (5, 6), (6, 2), (1, 5)],
    )?;
    let options = SolveOptions::default();

    let nmc = LabeledInstance::new(g.clone(), Problem::Nmc)
        .with_terminals([0, 1, 2])
        .with_weights(vec![1, 1, 1, 3, 2, 2, 1]);
    let (reduced, _) = nmc_to_wsfvs(&nmc);
    println!("nmc reduces to sfvs on {} vertices", reduced.n());

    let mut resfes = LabeledInstance::new(g.clone(), Problem::Resfes);
    resfes.s_edges.insert(edge_key(4, 5));

    let mut mwc = LabeledInstance::new(g, Problem::Mwc).with_terminals([0, 2, 6]);
    mwc.edge_weights.insert(edge_key(3, 4), 3);

    for instance in [nmc, resfes, mwc] {
        let solved = solve_via_reduction(&instance, None, &options)?;
        let brute = brute_solve(&instance)?;
        assert_eq!(solved.optimum_weight, brute.optimum_weight);
        println!("{}: weight {} deleting {:?}", instance.problem, solved.optimum_weight, solved.deletion);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
