// Drives the command-line interface in-process: generate an instance, solve
// it, and check the decomposition that ships with it.

use std::error::Error;

use twdp::cli::run;

fn call(args: &[&str]) -> Result<String, Box<dyn Error>> {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("twdp").chain(args.iter().copied()), &mut out, &mut err);
    if code == 2 {
        return Err(String::from_utf8(err)?.into());
    }
    Ok(String::from_utf8(out)?)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = tempfile::tempdir()?;
    let prefix = dir.path().join("nmc");
    let prefix = prefix.to_str().ok_or("non-utf8 path")?;
    call(&["generate", "--problem", "nmc", "--k", "2", "--edges", "2", "--seed", "3", "--plant", "--out", prefix])?;

    let graph = format!("{prefix}.grl");
    let td = format!("{prefix}.td");
    print!("{}", call(&["verify", "--graph", &graph, "--td", &td])?);
    print!("{}", call(&["decompose", "--graph", &graph])?.lines().next().unwrap_or_default());
    println!();
    print!("{}", call(&["solve", "--graph", &graph, "--td", &td])?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
