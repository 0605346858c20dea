//! The `twdp` command line: `solve`, `decompose`, `generate`, `verify`,
//! `oracle` and `bench`.
//!
//! Exit codes: 0 on success, 1 when the instance is infeasible, over budget
//! or fails verification, 2 on usage, parse or internal errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::dp::{solve_with, DpError, Mode, SolveOptions};
use crate::format::{
    deletion_is_valid, deletion_weight, parse_instance_file, parse_solution, serialize_instance, DeletionSet,
    RecordStats, ResultRecord, Status,
};
use crate::gadgets::{
    construct_lb_instance, construct_mwc_lb, construct_mwc_lb_weighted, construct_nmc_lb, gen_grid_instance,
    GadgetMeta, GeneratedInstance, GridVariant,
};
use crate::graph::{LabeledInstance, Problem};
use crate::oracle::{branch_solve, brute_solve_with, Deletion, OracleError, OracleLimits};
use crate::reductions::{solve_via_reduction, ReductionError};
use crate::td::{heuristic_td, load_td, nicify, validate_td, TreeDecomposition};

#[derive(Debug, Parser)]
#[command(name = "twdp", version, about = "Exact deletion problems over tree decompositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve an instance exactly.
    Solve(SolveArgs),
    /// Write a heuristic tree decomposition in PACE `.td` format.
    Decompose {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a lower-bound instance from a random grid instance.
    Generate(GenerateArgs),
    /// Check a decomposition or a claimed solution against an instance.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, conflicts_with = "solution")]
        td: Option<PathBuf>,
        #[arg(long)]
        solution: Option<PathBuf>,
        #[arg(long)]
        problem: Option<Problem>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Solve by exhaustive search (or branching with `--branch`).
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        problem: Option<Problem>,
        #[arg(long)]
        budget: Option<u64>,
        /// Only look for deletions of at most this weight.
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long, default_value_t = 14)]
        max_vertices: usize,
        #[arg(long, default_value_t = 18)]
        max_edges: usize,
        /// Bounded search tree for SFVS and NMC; needs a budget.
        #[arg(long)]
        branch: bool,
        #[arg(long)]
        json: bool,
    },
    /// Solve every `.grl` file of a directory and print a timing table.
    Bench {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long)]
        problem: Option<Problem>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Overrides the problem named in the file.
    #[arg(long)]
    problem: Option<Problem>,
    /// Decomposition to solve over; a heuristic one is computed otherwise.
    #[arg(long)]
    td: Option<PathBuf>,
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads; 0 uses one per core.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long)]
    json: bool,
    /// Include wall time in the record.
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long)]
    problem: Problem,
    #[arg(long)]
    k: usize,
    /// Edges of the source grid instance.
    #[arg(long)]
    edges: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Plant a solution in the source instance.
    #[arg(long)]
    plant: bool,
    /// Keep multiway cut edge weights instead of expanding them into paths.
    #[arg(long)]
    weighted: bool,
    /// Writes `<out>.grl`, `<out>.meta.json` and, if available, `<out>.td`.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Sidecar written next to a generated instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sidecar {
    pub meta: GadgetMeta,
    pub planted: Option<DeletionSet>,
    pub witness: Option<String>,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load(path: &Path, problem: Option<Problem>, budget: Option<u64>) -> Result<(LabeledInstance, Option<u64>), Failure> {
    let file = parse_instance_file(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    let mut instance = file.instance;
    if let Some(p) = problem {
        instance.problem = p;
    } else if !file.problem_given {
        return Err(Failure(format!("{}: no `pr` line; pass --problem", path.display())));
    }
    let budget = budget.or(file.budget);
    if let Some(b) = budget {
        instance.budget = b;
    }
    Ok((instance, budget))
}

/// Solves `instance` with the solver matching its problem and packs the
/// answer into a record. The deletion set is re-validated before it is
/// reported. Even cycle transversal has no decomposition-based solver and
/// goes to the exhaustive oracle.
pub fn solve_instance(
    instance: &LabeledInstance,
    td: Option<&TreeDecomposition>,
    budget: Option<u64>,
    options: &SolveOptions,
    timing: bool,
) -> Result<ResultRecord, String> {
    let start = Instant::now();
    let mut record = ResultRecord {
        problem: instance.problem,
        status: Status::Optimal,
        optimum_weight: None,
        deletion_set: None,
        budget,
        decomposition_width_used: None,
        stats: RecordStats::default(),
    };
    let outcome: Result<(Deletion, Option<usize>, usize, usize), String> = match instance.problem {
        Problem::Sfvs | Problem::Soct => {
            let mode = if instance.problem == Problem::Soct { Mode::Soct } else { Mode::Sfvs };
            let owned;
            let td = match td {
                Some(td) => td,
                None => {
                    owned = heuristic_td(&instance.graph);
                    &owned
                }
            };
            let nice = nicify(td, &instance.graph).map_err(|e| e.to_string())?;
            match solve_with(instance, &nice, mode, options) {
                Ok(s) => Ok((
                    Deletion::Vertices(s.deletion_set.ones().collect()),
                    Some(nice.width()),
                    s.stats.nodes,
                    s.stats.max_classes,
                )),
                Err(DpError::Infeasible) => Err(String::new()),
                Err(e) => return Err(e.to_string()),
            }
        }
        Problem::Nmc | Problem::Resfes | Problem::Mwc => match solve_via_reduction(instance, td, options) {
            Ok(s) => Ok((s.deletion, Some(s.width), s.stats.nodes, s.stats.max_classes)),
            Err(ReductionError::Solve(DpError::Infeasible)) => Err(String::new()),
            Err(e) => return Err(e.to_string()),
        },
        Problem::Ect => match brute_solve_with(instance, &OracleLimits::default()) {
            Ok(r) => Ok((r.deletion, None, 0, 0)),
            Err(OracleError::Infeasible) => Err(String::new()),
            Err(e) => return Err(format!("even cycle transversal is solved by the exhaustive oracle only: {e}")),
        },
    };
    match outcome {
        Ok((deletion, width, nodes, max_classes)) => {
            if !deletion_is_valid(instance, &deletion) {
                return Err("solver returned a deletion set that fails validation".into());
            }
            let weight = deletion_weight(instance, &deletion);
            record.optimum_weight = Some(weight);
            record.deletion_set = Some(DeletionSet::from_deletion(&deletion));
            record.decomposition_width_used = width;
            record.stats.nodes = nodes;
            record.stats.max_classes = max_classes;
            if budget.is_some_and(|b| weight > b) {
                record.status = Status::BudgetExceeded;
            }
        }
        Err(_) => record.status = Status::Infeasible,
    }
    if timing {
        record.stats.wall_ms = Some(start.elapsed().as_millis());
    }
    Ok(record)
}

/// Builds the instance `generate` would write.
pub fn generate(
    problem: Problem,
    k: usize,
    edges: usize,
    seed: u64,
    plant: bool,
    weighted: bool,
) -> Result<GeneratedInstance, String> {
    let variant = match problem {
        Problem::Sfvs | Problem::Soct | Problem::Ect => GridVariant::PermutationIndependentSet,
        Problem::Nmc => GridVariant::IndependentSet,
        Problem::Mwc => GridVariant::PermutationClique,
        Problem::Resfes => return Err("no generator for resfes; generate mwc and reduce".into()),
    };
    let h = gen_grid_instance(k, edges, variant, seed, plant).map_err(|e| e.to_string())?;
    let out = match problem {
        Problem::Nmc => construct_nmc_lb(&h),
        Problem::Mwc if weighted => construct_mwc_lb_weighted(&h),
        Problem::Mwc => construct_mwc_lb(&h),
        p => construct_lb_instance(p, &h),
    };
    out.map_err(|e| e.to_string())
}

/// Parses `argv` (program name first), runs the subcommand and returns the
/// exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let target: &mut dyn Write = if informational { out } else { err };
            let _ = write!(target, "{}", e.render());
            return if informational { 0 } else { 2 };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Solve(a) => {
            let (instance, budget) = load(&a.graph, a.problem, a.budget)?;
            let td = match &a.td {
                Some(p) => Some(load_td(&read(p)?).map_err(|e| Failure(format!("{}: {e}", p.display())))?),
                None => None,
            };
            let options = SolveOptions { threads: a.threads };
            let record = solve_instance(&instance, td.as_ref(), budget, &options, a.timing).map_err(Failure)?;
            if a.json {
                writeln!(out, "{}", record.to_json())?;
            } else {
                write!(out, "{}", record.to_text())?;
            }
            Ok(record.status.exit_code())
        }
        Command::Decompose { graph, out: path } => {
            let file = parse_instance_file(&read(&graph)?).map_err(|e| Failure(format!("{}: {e}", graph.display())))?;
            let td = heuristic_td(&file.instance.graph);
            let text = td.to_td_string();
            match path {
                Some(p) => fs::write(&p, text)?,
                None => write!(out, "{text}")?,
            }
            Ok(0)
        }
        Command::Generate(a) => {
            let g = generate(a.problem, a.k, a.edges, a.seed, a.plant, a.weighted).map_err(Failure)?;
            let text = serialize_instance(&g.instance);
            match &a.out {
                Some(prefix) => {
                    let with = |ext: &str| PathBuf::from(format!("{}.{ext}", prefix.display()));
                    fs::write(with("grl"), text)?;
                    let witness = match &g.witness {
                        Some(td) => {
                            let p = with("td");
                            fs::write(&p, td.to_td_string())?;
                            p.file_name().map(|f| f.to_string_lossy().into_owned())
                        }
                        None => None,
                    };
                    let sidecar = Sidecar {
                        meta: g.meta.clone(),
                        planted: g.planted.as_ref().map(DeletionSet::from_deletion),
                        witness,
                    };
                    fs::write(with("meta.json"), serde_json::to_string_pretty(&sidecar)?)?;
                    writeln!(
                        out,
                        "wrote {} vertices, {} edges, budget {}",
                        g.instance.n(),
                        g.instance.graph.edge_count(),
                        g.meta.budget
                    )?;
                }
                None => write!(out, "{text}")?,
            }
            Ok(0)
        }
        Command::Verify {
            graph,
            td,
            solution,
            problem,
            budget,
        } => {
            if let Some(td_path) = td {
                let file = parse_instance_file(&read(&graph)?).map_err(|e| Failure(format!("{}: {e}", graph.display())))?;
                let td = match load_td(&read(&td_path)?) {
                    Ok(td) => td,
                    Err(e) => {
                        writeln!(out, "invalid: {e}")?;
                        return Ok(1);
                    }
                };
                return Ok(match validate_td(&file.instance.graph, &td) {
                    Ok(()) => {
                        writeln!(out, "valid: width {}", td.width())?;
                        0
                    }
                    Err(v) => {
                        writeln!(out, "invalid: {v}")?;
                        1
                    }
                });
            }
            let Some(sol_path) = solution else {
                return Err(Failure("verify needs --td or --solution".into()));
            };
            let (instance, budget) = load(&graph, problem, budget)?;
            let deletion = parse_solution(&read(&sol_path)?, instance.problem.deletes_edges())
                .map_err(|e| Failure(format!("{}: {e}", sol_path.display())))?;
            let weight = deletion_weight_checked(&instance, &deletion);
            let valid = weight.is_some() && deletion_is_valid(&instance, &deletion);
            let within = budget.is_none_or(|b| weight.is_some_and(|w| w <= b));
            match (valid, within) {
                (true, true) => writeln!(out, "valid: weight {}", weight.unwrap_or(0))?,
                (true, false) => writeln!(out, "invalid: weight {} exceeds budget", weight.unwrap_or(0))?,
                (false, _) => writeln!(out, "invalid: deletion leaves a forbidden structure or names a forbidden element")?,
            }
            Ok(if valid && within { 0 } else { 1 })
        }
        Command::Oracle {
            graph,
            problem,
            budget,
            cap,
            max_vertices,
            max_edges,
            branch,
            json,
        } => {
            let (instance, budget) = load(&graph, problem, budget)?;
            let found = if branch {
                let b = budget.or(cap).ok_or_else(|| Failure("--branch needs --budget or --cap".into()))?;
                branch_solve(&instance, b)?.ok_or(OracleError::NoneWithinCap(b))
            } else {
                let limits = OracleLimits {
                    max_vertices,
                    max_edges,
                    weight_cap: cap,
                };
                brute_solve_with(&instance, &limits)
            };
            let mut record = ResultRecord {
                problem: instance.problem,
                status: Status::Optimal,
                optimum_weight: None,
                deletion_set: None,
                budget,
                decomposition_width_used: None,
                stats: RecordStats::default(),
            };
            match found {
                Ok(r) => {
                    record.optimum_weight = Some(r.optimum_weight);
                    record.deletion_set = Some(DeletionSet::from_deletion(&r.deletion));
                    if budget.is_some_and(|b| r.optimum_weight > b) {
                        record.status = Status::BudgetExceeded;
                    }
                }
                Err(OracleError::Infeasible) => record.status = Status::Infeasible,
                Err(OracleError::NoneWithinCap(_)) => record.status = Status::BudgetExceeded,
                Err(e) => return Err(e.into()),
            }
            if json {
                writeln!(out, "{}", record.to_json())?;
            } else {
                write!(out, "{}", record.to_text())?;
            }
            Ok(record.status.exit_code())
        }
        Command::Bench {
            dir,
            problem,
            threads,
            csv,
        } => {
            let mut files: Vec<PathBuf> = fs::read_dir(&dir)?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "grl"))
                .collect();
            files.sort();
            let options = SolveOptions { threads };
            if csv {
                writeln!(out, "file,problem,n,m,width,status,optimum,ms")?;
            } else {
                writeln!(
                    out,
                    "{:<28} {:>7} {:>6} {:>7} {:>6} {:>16} {:>8} {:>9}",
                    "file", "problem", "n", "m", "width", "status", "optimum", "ms"
                )?;
            }
            for path in files {
                let (instance, budget) = load(&path, problem, None)?;
                let record = solve_instance(&instance, None, budget, &options, true).map_err(Failure)?;
                let name = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
                let width = record.decomposition_width_used.map_or("-".into(), |w| w.to_string());
                let opt = record.optimum_weight.map_or("-".into(), |w| w.to_string());
                let ms = record.stats.wall_ms.unwrap_or(0);
                let (n, m) = (instance.n(), instance.graph.edge_count());
                if csv {
                    writeln!(out, "{name},{},{n},{m},{width},{},{opt},{ms}", instance.problem, record.status.name())?;
                } else {
                    writeln!(
                        out,
                        "{name:<28} {:>7} {n:>6} {m:>7} {width:>6} {:>16} {opt:>8} {ms:>9}",
                        instance.problem.name(),
                        record.status.name()
                    )?;
                }
            }
            Ok(0)
        }
    }
}

/// Weight of a claimed deletion, or `None` if it names something outside
/// the instance.
fn deletion_weight_checked(instance: &LabeledInstance, deletion: &Deletion) -> Option<u64> {
    let ok = match deletion {
        Deletion::Vertices(v) => v.iter().all(|&x| x < instance.n()),
        Deletion::Edges(e) => e.iter().all(|&(a, b)| a < instance.n() && b < instance.n() && instance.graph.has_edge(a, b)),
    };
    ok.then(|| deletion_weight(instance, deletion))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("twdp").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn write(dir: &Path, name: &str, text: &str) -> String {
        let p = dir.join(name);
        fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    }

    #[test]
    fn solve_c5_with_one_s_vertex() {
        let dir = tempfile::tempdir().unwrap();
        let g = write(dir.path(), "c5.grl", "p grl 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\nvs 1\n");
        let (code, out, _) = run_capture(&["solve", "--problem", "soct", "--graph", &g, "--budget", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("status: optimal\n"));
        assert!(out.contains("optimum_weight: 1\n"));
        let (code, out, _) = run_capture(&["solve", "--problem", "soct", "--graph", &g, "--budget", "0", "--json"]);
        assert_eq!(code, 1);
        let rec: ResultRecord = serde_json::from_str(&out).unwrap();
        assert_eq!(rec.status, Status::BudgetExceeded);
    }

    #[test]
    fn usage_and_parse_errors_exit_2() {
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        let dir = tempfile::tempdir().unwrap();
        let g = write(dir.path(), "bad.grl", "p grl 2 1\ne 1 1\n");
        let (code, _, err) = run_capture(&["solve", "--problem", "sfvs", "--graph", &g]);
        assert_eq!(code, 2);
        assert!(err.contains("line 2"));
        let g = write(dir.path(), "ok.grl", "p grl 2 1\ne 1 2\n");
        assert_eq!(run_capture(&["solve", "--graph", &g]).0, 2);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn verify_reports_invalid_decompositions() {
        let dir = tempfile::tempdir().unwrap();
        let g = write(dir.path(), "g.grl", "p grl 3 2\ne 1 2\ne 2 3\n");
        let bad = write(dir.path(), "g.td", "s td 2 2 3\nb 1 1 2\nb 2 3\n1 2\n");
        let (code, out, _) = run_capture(&["verify", "--graph", &g, "--td", &bad]);
        assert_eq!(code, 1);
        assert!(out.starts_with("invalid:"));
        let good = write(dir.path(), "h.td", "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
        assert_eq!(run_capture(&["verify", "--graph", &g, "--td", &good]).0, 0);
    }

    #[test]
    fn verify_claimed_solutions() {
        let dir = tempfile::tempdir().unwrap();
        let g = write(dir.path(), "t.grl", "p grl 3 3\npr sfvs\ne 1 2\ne 2 3\ne 1 3\nvs 1\n");
        let good = write(dir.path(), "good.sol", "2\n");
        let none = write(dir.path(), "none.sol", "\n");
        assert_eq!(run_capture(&["verify", "--graph", &g, "--solution", &good]).0, 0);
        assert_eq!(run_capture(&["verify", "--graph", &g, "--solution", &good, "--budget", "0"]).0, 1);
        assert_eq!(run_capture(&["verify", "--graph", &g, "--solution", &none]).0, 1);
    }

    #[test]
    fn generate_writes_instance_sidecar_and_witness() {
        let dir = tempfile::tempdir().unwrap();
        let prefix = dir.path().join("lb").to_string_lossy().into_owned();
        let args = ["generate", "--problem", "sfvs", "--k", "2", "--edges", "1", "--plant", "--seed", "7", "--out", &prefix];
        let (code, out, _) = run_capture(&args);
        assert_eq!(code, 0, "{out}");
        let sidecar: Sidecar = serde_json::from_str(&fs::read_to_string(format!("{prefix}.meta.json")).unwrap()).unwrap();
        assert_eq!(sidecar.meta.budget, 4);
        assert_eq!(sidecar.witness.as_deref(), Some("lb.td"));
        let grl = format!("{prefix}.grl");
        let td = format!("{prefix}.td");
        assert_eq!(run_capture(&["verify", "--graph", &grl, "--td", &td]).0, 0);
        let Some(DeletionSet::Vertices(planted)) = sidecar.planted else { panic!() };
        let sol = write(dir.path(), "planted.sol", &planted.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
        assert_eq!(run_capture(&["verify", "--graph", &grl, "--solution", &sol]).0, 0);
    }

    #[test]
    fn oracle_and_decompose() {
        let dir = tempfile::tempdir().unwrap();
        let g = write(dir.path(), "p.grl", "p grl 3 2\npr nmc\ne 1 2\ne 2 3\nvt 1\nvt 3\n");
        let (code, out, _) = run_capture(&["oracle", "--graph", &g]);
        assert_eq!(code, 0);
        assert!(out.contains("deletion_set: 2\n"));
        let (code, out, _) = run_capture(&["oracle", "--graph", &g, "--branch", "--budget", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("optimum_weight: 1\n"));
        let (code, out, _) = run_capture(&["decompose", "--graph", &g]);
        assert_eq!(code, 0);
        assert!(out.starts_with("s td "));
    }

    #[test]
    fn bench_lists_every_instance() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "a.grl", "p grl 3 3\npr soct\ne 1 2\ne 2 3\ne 1 3\nvs 1\n");
        write(dir.path(), "b.grl", "p grl 3 2\npr mwc\ne 1 2\ne 2 3\nvt 1\nvt 3\n");
        write(dir.path(), "notes.txt", "ignored");
        let d = dir.path().to_string_lossy().into_owned();
        let (code, out, _) = run_capture(&["bench", "--dir", &d, "--csv"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("a.grl,soct,3,3,"));
        assert!(lines[2].contains(",optimal,1,"));
    }

    #[test]
    fn infeasible_instances_exit_1() {
        let dir = tempfile::tempdir().unwrap();
        let g = write(dir.path(), "adj.grl", "p grl 2 1\npr nmc\ne 1 2\nvt 1\nvt 2\n");
        let (code, out, _) = run_capture(&["solve", "--graph", &g]);
        assert_eq!(code, 1);
        assert!(out.contains("status: infeasible"));
    }
}
