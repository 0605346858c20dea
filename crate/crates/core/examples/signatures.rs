// Partial solutions at a decomposition node and the signatures that the
// dynamic program uses to merge them.

use std::collections::BTreeMap;
use std::error::Error;

use twdp::dp::{signature, Mode};
use twdp::graph::{set_of, Graph, LabeledInstance, Problem};
use twdp::oracle::{completion_consistency, NodeContext};
use twdp::td::{heuristic_td, nicify};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = Graph::from_edges(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4), (4, 5), (5, 6), (6, 7), (7, 4), (2, 5)],
    )?;
    let instance = LabeledInstance::new(g, Problem::Soct).with_s([1, 4, 6]);
    let nice = nicify(&heuristic_td(&instance.graph), &instance.graph)?;
    let below = nice.subtree_vertices();

    // The node with the most vertices below it, short of the root.
    let t = (0..nice.nodes.len() - 1)
        .filter(|&t| nice.nodes[t].bag.len() >= 2)
        .max_by_key(|&t| below[t].count_ones(..))
        .ok_or("no suitable node")?;
    let bag = nice.nodes[t].bag.clone();
    let inside: Vec<usize> = below[t].ones().collect();
    println!("node {t}: bag {bag:?}, {} vertices below", inside.len());

    let mut classes = BTreeMap::new();
    for mask in 0u32..1 << inside.len() {
        let x = set_of(instance.n(), (0..inside.len()).filter(|&i| mask >> i & 1 == 1).map(|i| inside[i]));
        if let Ok(sig) = signature(&instance, &x, &bag, Mode::Soct) {
            classes.entry(sig).or_insert_with(Vec::new).push(x);
        }
    }
    println!("{} signatures", classes.len());
    let ctx = NodeContext {
        bag,
        inside: below[t].clone(),
    };
    for (sig, sets) in classes.iter().filter(|(_, sets)| sets.len() > 1).take(3) {
        println!("boundary {:?}, forest {}: {} sets", sig.boundary, sig.forest_code, sets.len());
        completion_consistency(&instance, &sets[0], &sets[1], &ctx, 200, 7, Mode::Soct)?;
    }
    println!("equal signatures agreed on every sampled completion");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
