// Subset Feedback Vertex Set. With S equal to all vertices this is the
// classical Feedback Vertex Set problem.

use std::error::Error;

use twdp::dp::{solve_sfvs, solve_with, Mode, SolveOptions};
use twdp::graph::{Graph, LabeledInstance, Problem};
use twdp::oracle::max_induced_forest_weight;
use twdp::td::{heuristic_td, nicify};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // A 3x4 grid.
    let (rows, cols) = (3, 4);
    let id = |r: usize, c: usize| r * cols + c;
    let mut g = Graph::new(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                g.add_edge(id(r, c), id(r, c + 1))?;
            }
            if r + 1 < rows {
                g.add_edge(id(r, c), id(r + 1, c))?;
            }
        }
    }
    let nice = nicify(&heuristic_td(&g), &g)?;

    let subset = LabeledInstance::new(g.clone(), Problem::Sfvs).with_s([id(0, 0), id(2, 3)]);
    let a = solve_sfvs(&subset, &nice)?;
    println!("cycles through two corners: delete {:?}", a.deletion_set.ones().collect::<Vec<_>>());

    let all = LabeledInstance::new(g.clone(), Problem::Sfvs).with_s(0..g.n());
    let b = solve_with(&all, &nice, Mode::Sfvs, &SolveOptions { threads: 2 })?;
    println!("every cycle: delete {:?}", b.deletion_set.ones().collect::<Vec<_>>());
    assert_eq!(b.deletion_weight, all.total_weight() - max_induced_forest_weight(&g, &all.weights));
    println!("largest kept set classes per node: {}", b.stats.max_classes);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
