// Lower-bound constructions for Node and Edge Multiway Cut.

use std::error::Error;

use twdp::format::{deletion_is_valid, deletion_weight};
use twdp::gadgets::{construct_mwc_lb, construct_nmc_lb, gen_grid_instance, mwc_parameters, GridVariant};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = mwc_parameters(2, 1, 1, 4)?;
    println!("k = 2, max degree 1, one edge, m = 4: h = {}, k' = {}", p.h, p.k_prime);

    let h = gen_grid_instance(2, 3, GridVariant::PermutationClique, 5, true)?;
    let g = construct_mwc_lb(&h)?;
    let params = g.meta.mwc.ok_or("missing parameters")?;
    let planted = g.planted.as_ref().ok_or("no planted cut")?;
    assert!(deletion_is_valid(&g.instance, planted));
    println!(
        "edge multiway cut: {} vertices, {} edges, m = {}, k' = {}, planted weight {}",
        g.instance.n(),
        g.instance.graph.edge_count(),
        params.m,
        params.k_prime,
        deletion_weight(&g.instance, planted)
    );

    let h = gen_grid_instance(2, 2, GridVariant::IndependentSet, 5, true)?;
    let g = construct_nmc_lb(&h)?;
    let planted = g.planted.as_ref().ok_or("no planted cut")?;
    assert!(deletion_is_valid(&g.instance, planted));
    println!("node multiway cut: {} vertices, budget {}", g.instance.n(), g.meta.budget);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
