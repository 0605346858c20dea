// Reading and writing instance files and result records.

use std::error::Error;

use twdp::cli::solve_instance;
use twdp::dp::SolveOptions;
use twdp::format::{parse_instance_file, parse_solution, serialize_instance, deletion_is_valid};

const INSTANCE: &str = "\
c a 5-cycle with a chord, vertex 1 heavy
p grl 5 6
pr soct
e 1 2
e 2 3
e 3 4
e 4 5
e 5 1
e 1 3
vw 1 10
vs 1
vs 4
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let file = parse_instance_file(INSTANCE)?;
    let instance = file.instance;
    println!("{} vertices, problem {}", instance.n(), instance.problem);

    let text = serialize_instance(&instance);
    assert_eq!(parse_instance_file(&text)?.instance, instance);

    let record = solve_instance(&instance, None, file.budget, &SolveOptions::default(), false)?;
    print!("{}", record.to_text());
    println!("{}", record.to_json());

    let deletion = parse_solution("2\n", false)?;
    println!("deleting vertex 2 is valid: {}", deletion_is_valid(&instance, &deletion));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
