// Exhaustive checks of the four gadget families used by the lower-bound
// constructions.

use std::error::Error;

use twdp::gadgets::{legal_column_deletions, verify_gadget, wiring, GadgetKind};
use twdp::graph::Problem;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let kinds = [
        GadgetKind::ColumnSelector,
        GadgetKind::RowSelector,
        GadgetKind::Edge,
        GadgetKind::Propagation,
    ];
    for problem in [Problem::Sfvs, Problem::Soct, Problem::Ect] {
        let variants = wiring(problem)?;
        for (kind, variant) in kinds.into_iter().zip(variants) {
            verify_gadget(kind, variant, 2, problem)?;
            println!("{problem}: {kind:?} variant {variant} verified at k = 2");
        }
        let legal = legal_column_deletions(variants[0], 3, problem)?;
        println!("{problem}: column selector at k = 3 has {} legal deletions", legal.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
