// Heuristic tree decompositions, the `.td` text format, and conversion to
// a nice tree decomposition.

use std::error::Error;

use twdp::graph::Graph;
use twdp::td::{heuristic_td, load_td, nicify, validate_td, NiceKind};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // Wheel with 8 spokes: treewidth 3.
    let mut g = Graph::new(9);
    for i in 0..8 {
        g.add_edge(8, i)?;
        g.add_edge(i, (i + 1) % 8)?;
    }
    let td = heuristic_td(&g);
    validate_td(&g, &td)?;
    let text = td.to_td_string();
    print!("{text}");

    let reloaded = load_td(&text)?;
    assert_eq!(reloaded.width(), td.width());

    let nice = nicify(&reloaded, &g)?;
    let count = |f: fn(&NiceKind) -> bool| nice.nodes.iter().filter(|t| f(&t.kind)).count();
    println!(
        "nice: width {}, {} nodes ({} introduce, {} forget, {} join)",
        nice.width(),
        nice.nodes.len(),
        count(|k| matches!(k, NiceKind::Introduce(_))),
        count(|k| matches!(k, NiceKind::Forget(_))),
        count(|k| matches!(k, NiceKind::Join))
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
