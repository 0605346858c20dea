mod solve_soct {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/solve_soct.rs"));
}

#[test]
fn solve_soct_example_runs() {
    solve_soct::run_example().expect("solve_soct example should run");
}

mod solve_sfvs {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/solve_sfvs.rs"));
}

#[test]
fn solve_sfvs_example_runs() {
    solve_sfvs::run_example().expect("solve_sfvs example should run");
}

mod reductions {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/reductions.rs"));
}

#[test]
fn reductions_example_runs() {
    reductions::run_example().expect("reductions example should run");
}

mod decompose {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/decompose.rs"));
}

#[test]
fn decompose_example_runs() {
    decompose::run_example().expect("decompose example should run");
}

mod oracle {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/oracle.rs"));
}

#[test]
fn oracle_example_runs() {
    oracle::run_example().expect("oracle example should run");
}

mod signatures {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/signatures.rs"));
}

#[test]
fn signatures_example_runs() {
    signatures::run_example().expect("signatures example should run");
}

mod gadgets {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/gadgets.rs"));
}

#[test]
fn gadgets_example_runs() {
    gadgets::run_example().expect("gadgets example should run");
}

mod lower_bound {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lower_bound.rs"));
}

#[test]
fn lower_bound_example_runs() {
    lower_bound::run_example().expect("lower_bound example should run");
}

mod multiway_cut {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/multiway_cut.rs"));
}

#[test]
fn multiway_cut_example_runs() {
    multiway_cut::run_example().expect("multiway_cut example should run");
}

mod formats {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/formats.rs"));
}

#[test]
fn formats_example_runs() {
    formats::run_example().expect("formats example should run");
}

mod command_line {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/command_line.rs"));
}

#[test]
fn command_line_example_runs() {
    command_line::run_example().expect("command_line example should run");
}
