// Builds a lower-bound instance from a grid problem and checks the planted
// deletion set and the narrow path decomposition that come with it.

use std::error::Error;

use twdp::format::{deletion_is_valid, deletion_weight};
use twdp::gadgets::{construct_lb_instance, gen_grid_instance, witness_path_decomposition, GridVariant};
use twdp::graph::Problem;
use twdp::td::validate_td;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let h = gen_grid_instance(3, 4, GridVariant::PermutationIndependentSet, 1, true)?;
    println!("grid instance: k = {}, edges {:?}", h.k, h.edges);
    println!("planted solution {:?}", h.planted);

    for problem in [Problem::Sfvs, Problem::Soct, Problem::Ect] {
        let g = construct_lb_instance(problem, &h)?;
        let planted = g.planted.as_ref().ok_or("no planted set")?;
        assert!(deletion_is_valid(&g.instance, planted));
        let witness = witness_path_decomposition(&g)?;
        validate_td(&g.instance.graph, &witness)?;
        println!(
            "{problem}: {} vertices, budget {}, planted weight {}, witness width {}",
            g.instance.n(),
            g.meta.budget,
            deletion_weight(&g.instance, planted),
            witness.width()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
