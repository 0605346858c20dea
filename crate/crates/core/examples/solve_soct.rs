// Subset Odd Cycle Transversal on a small weighted graph, solved by the
// tree decomposition dynamic program and checked against brute force.

use std::error::Error;

use twdp::dp::solve_soct;
use twdp::graph::{Graph, LabeledInstance, Problem};
use twdp::oracle::brute_solve;
use twdp::td::{heuristic_td, nicify};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // Two triangles joined by a 4-cycle. Only vertex 0 and vertex 5 are in S,
    // so only odd cycles through them matter.
    let g = Graph::from_edges(
        8,
        [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 6), (6, 2), (4, 5), (5, 7), (7, 4)],
    )?;
    let instance = LabeledInstance::new(g, Problem::Soct)
        .with_s([0, 5])
        .with_weights(vec![5, 2, 3, 1, 4, 6, 1, 2]);

    let td = heuristic_td(&instance.graph);
    let nice = nicify(&td, &instance.graph)?;
    let solution = solve_soct(&instance, &nice)?;
    let deleted: Vec<usize> = solution.deletion_set.ones().collect();
    println!("width {}, {} nice nodes", nice.width(), nice.nodes.len());
    println!("delete {deleted:?} at weight {}", solution.deletion_weight);

    let brute = brute_solve(&instance)?;
    assert_eq!(brute.optimum_weight, solution.deletion_weight);
    println!("brute force agrees: {}", brute.optimum_weight);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
