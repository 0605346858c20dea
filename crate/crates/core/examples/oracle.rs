// Exhaustive and branching oracles for small instances of every problem.

use std::error::Error;

use twdp::graph::{Graph, LabeledInstance, Problem};
use twdp::oracle::{branch_solve, brute_solve, brute_solve_with, OracleError, OracleLimits};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // The Petersen graph.
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5)?;
        g.add_edge(i, i + 5)?;
        g.add_edge(i + 5, (i + 2) % 5 + 5)?;
    }
    for problem in [Problem::Soct, Problem::Sfvs, Problem::Ect] {
        let instance = LabeledInstance::new(g.clone(), problem).with_s([0, 7]);
        let r = brute_solve(&instance)?;
        println!("{problem}: optimum {} ({} optimal sets)", r.optimum_weight, r.optimal_count);
    }

    let fvs = LabeledInstance::new(g.clone(), Problem::Sfvs).with_s(0..10);
    let capped = OracleLimits {
        weight_cap: Some(2),
        ..OracleLimits::default()
    };
    match brute_solve_with(&fvs, &capped) {
        Err(OracleError::NoneWithinCap(cap)) => println!("no feedback vertex set of size <= {cap}"),
        other => println!("unexpected: {other:?}"),
    }
    // The branching solver answers the decision question on larger graphs.
    if let Some(r) = branch_solve(&fvs, 3)? {
        println!("feedback vertex set of size {}: {:?}", r.optimum_weight, r.deletion);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
