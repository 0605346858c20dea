//! Text formats: labelled instances, result records and generator sidecars.
//!
//! Instances are line-oriented and 1-indexed. Lines starting with `#` or
//! `c` are comments.
//!
//! ```text
//! p grl <n> <m>    header, exactly once, before any other line
//! e u v            edge
//! vw v w           vertex weight (default 1)
//! vs v             vertex in S
//! vt v             terminal
//! es u v           S-edge (must also be listed with `e`)
//! vf v             vertex that may not be deleted
//! ew u v w         edge weight (default 1)
//! pr <problem>     problem name (optional)
//! bd <k>           budget (optional)
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{edge_key, set_of, Edge, Graph, LabeledInstance, Problem, VertexId};
use crate::oracle::{edge_deletion_ok, vertex_deletion_ok, Deletion};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct FormatError {
    pub line: usize,
    pub msg: String,
}

/// A parsed instance file. `budget` is `None` when the file has no `bd` line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub instance: LabeledInstance,
    pub budget: Option<u64>,
    pub problem_given: bool,
}

/// Parses an instance; the problem defaults to SFVS when no `pr` line is
/// present.
pub fn load_instance(text: &str) -> Result<LabeledInstance, FormatError> {
    parse_instance_file(text).map(|f| f.instance)
}

pub fn parse_instance_file(text: &str) -> Result<InstanceFile, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut inst: Option<LabeledInstance> = None;
    let mut budget = None;
    let mut problem: Option<Problem> = None;
    let mut weighted: Vec<(Edge, u64, usize)> = Vec::new();
    let mut s_edges: Vec<(Edge, usize)> = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let err = |msg: String| FormatError { line, msg };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed == "c" || trimmed.starts_with("c ") {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        let tag = parts.next().expect("non-empty line");
        let args: Vec<&str> = parts.collect();
        let want = |count: usize| {
            if args.len() == count {
                Ok(())
            } else {
                Err(err(format!("`{tag}` takes {count} arguments, got {}", args.len())))
            }
        };
        let num = |s: &str| s.parse::<u64>().map_err(|_| err(format!("`{s}` is not a non-negative integer")));
        if tag == "p" {
            if header.is_some() {
                return Err(err("second header".into()));
            }
            want(3)?;
            if args[0] != "grl" {
                return Err(err(format!("unknown format `{}`", args[0])));
            }
            let n = num(args[1])? as usize;
            let m = num(args[2])? as usize;
            header = Some((n, m));
            inst = Some(LabeledInstance::new(Graph::new(n), Problem::Sfvs));
            continue;
        }
        let Some(instance) = inst.as_mut() else {
            return Err(err(format!("`{tag}` before the `p grl` header")));
        };
        let n = instance.n();
        let vertex = |s: &str| -> Result<VertexId, FormatError> {
            let v = num(s)?;
            if v == 0 || v as usize > n {
                Err(err(format!("vertex {v} outside 1..={n}")))
            } else {
                Ok(v as usize - 1)
            }
        };
        let pair = |a: &str, b: &str| -> Result<Edge, FormatError> {
            let (u, v) = (vertex(a)?, vertex(b)?);
            if u == v {
                return Err(err(format!("loop at vertex {}", u + 1)));
            }
            Ok(edge_key(u, v))
        };
        match tag {
            "e" => {
                want(2)?;
                let (u, v) = pair(args[0], args[1])?;
                if instance.graph.has_edge(u, v) {
                    return Err(err(format!("duplicate edge {} {}", u + 1, v + 1)));
                }
                instance.graph.add_edge(u, v).map_err(|e| err(e.to_string()))?;
            }
            "vw" => {
                want(2)?;
                let v = vertex(args[0])?;
                instance.weights[v] = num(args[1])?;
            }
            "vs" | "vt" | "vf" => {
                want(1)?;
                let v = vertex(args[0])?;
                match tag {
                    "vs" => instance.s_vertices.insert(v),
                    "vt" => instance.terminals.insert(v),
                    _ => instance.forced_keep.insert(v),
                }
            }
            "es" => {
                want(2)?;
                s_edges.push((pair(args[0], args[1])?, line));
            }
            "ew" => {
                want(3)?;
                weighted.push((pair(args[0], args[1])?, num(args[2])?, line));
            }
            "pr" => {
                want(1)?;
                problem = Some(args[0].parse().map_err(err)?);
            }
            "bd" => {
                want(1)?;
                budget = Some(num(args[0])?);
            }
            other => return Err(err(format!("unknown line tag `{other}`"))),
        }
    }
    let (Some((_, m)), Some(mut instance)) = (header, inst) else {
        return Err(FormatError {
            line: text.lines().count().max(1),
            msg: "missing `p grl` header".into(),
        });
    };
    if instance.graph.edge_count() != m {
        return Err(FormatError {
            line: 1,
            msg: format!("header declares {m} edges, found {}", instance.graph.edge_count()),
        });
    }
    for ((u, v), line) in s_edges {
        if !instance.graph.has_edge(u, v) {
            return Err(FormatError {
                line,
                msg: format!("S-edge {} {} is not an edge", u + 1, v + 1),
            });
        }
        instance.s_edges.insert((u, v));
    }
    for ((u, v), w, line) in weighted {
        if !instance.graph.has_edge(u, v) {
            return Err(FormatError {
                line,
                msg: format!("weighted pair {} {} is not an edge", u + 1, v + 1),
            });
        }
        instance.edge_weights.insert((u, v), w);
    }
    if let Some(p) = problem {
        instance.problem = p;
    }
    if let Some(b) = budget {
        instance.budget = b;
    }
    Ok(InstanceFile {
        instance,
        budget,
        problem_given: problem.is_some(),
    })
}

/// Writes every label, the problem and a nonzero budget; `load_instance`
/// reads the result back unchanged. A zero budget means "no budget" and is
/// left out so that solving the file reports the optimum.
pub fn serialize_instance(instance: &LabeledInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p grl {} {}", instance.n(), instance.graph.edge_count());
    let _ = writeln!(out, "pr {}", instance.problem);
    if instance.budget > 0 {
        let _ = writeln!(out, "bd {}", instance.budget);
    }
    for (u, v) in instance.graph.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    for (v, &w) in instance.weights.iter().enumerate() {
        if w != 1 {
            let _ = writeln!(out, "vw {} {w}", v + 1);
        }
    }
    for (tag, set) in [
        ("vs", &instance.s_vertices),
        ("vt", &instance.terminals),
        ("vf", &instance.forced_keep),
    ] {
        for v in set.ones() {
            let _ = writeln!(out, "{tag} {}", v + 1);
        }
    }
    for &(u, v) in &instance.s_edges {
        let _ = writeln!(out, "es {} {}", u + 1, v + 1);
    }
    for (&(u, v), &w) in &instance.edge_weights {
        let _ = writeln!(out, "ew {} {} {w}", u + 1, v + 1);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Optimal,
    Infeasible,
    BudgetExceeded,
    Error,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Optimal => "optimal",
            Status::Infeasible => "infeasible",
            Status::BudgetExceeded => "budget-exceeded",
            Status::Error => "error",
        }
    }

    /// Process exit code for a finished run.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Optimal => 0,
            Status::Infeasible | Status::BudgetExceeded => 1,
            Status::Error => 2,
        }
    }
}

/// A deletion set with 1-indexed vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeletionSet {
    Vertices(Vec<usize>),
    Edges(Vec<(usize, usize)>),
}

impl DeletionSet {
    pub fn from_deletion(d: &Deletion) -> Self {
        match d {
            Deletion::Vertices(v) => DeletionSet::Vertices(v.iter().map(|x| x + 1).collect()),
            Deletion::Edges(e) => DeletionSet::Edges(e.iter().map(|&(a, b)| (a + 1, b + 1)).collect()),
        }
    }

    pub fn to_deletion(&self) -> Deletion {
        match self {
            DeletionSet::Vertices(v) => Deletion::Vertices(v.iter().map(|x| x - 1).collect()),
            DeletionSet::Edges(e) => Deletion::Edges(e.iter().map(|&(a, b)| (a - 1, b - 1)).collect()),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordStats {
    pub nodes: usize,
    pub max_classes: usize,
    /// Omitted unless timing was requested, so that records are reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub problem: Problem,
    pub status: Status,
    pub optimum_weight: Option<u64>,
    pub deletion_set: Option<DeletionSet>,
    pub budget: Option<u64>,
    pub decomposition_width_used: Option<usize>,
    pub stats: RecordStats,
}

impl ResultRecord {
    /// `key: value` lines with the field names of the JSON form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        let _ = writeln!(out, "problem: {}", self.problem);
        let _ = writeln!(out, "status: {}", self.status.name());
        let _ = writeln!(out, "optimum_weight: {}", opt(self.optimum_weight.map(|w| w.to_string())));
        let set = match &self.deletion_set {
            None => "-".to_string(),
            Some(DeletionSet::Vertices(v)) => v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
            Some(DeletionSet::Edges(e)) => e.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" "),
        };
        let _ = writeln!(out, "deletion_set: {set}");
        let _ = writeln!(out, "budget: {}", opt(self.budget.map(|b| b.to_string())));
        let _ = writeln!(
            out,
            "decomposition_width_used: {}",
            opt(self.decomposition_width_used.map(|w| w.to_string()))
        );
        let _ = writeln!(out, "stats.nodes: {}", self.stats.nodes);
        let _ = writeln!(out, "stats.max_classes: {}", self.stats.max_classes);
        if let Some(ms) = self.stats.wall_ms {
            let _ = writeln!(out, "stats.wall_ms: {ms}");
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialise")
    }
}

/// Whether applying `deletion` to `instance` leaves a valid graph.
pub fn deletion_is_valid(instance: &LabeledInstance, deletion: &Deletion) -> bool {
    match deletion {
        Deletion::Vertices(v) => {
            v.iter().all(|&x| x < instance.n()) && vertex_deletion_ok(instance, &set_of(instance.n(), v.iter().copied()))
        }
        Deletion::Edges(e) => {
            let set: BTreeSet<Edge> = e.iter().map(|&(a, b)| edge_key(a, b)).collect();
            set.iter().all(|&(a, b)| b < instance.n() && instance.graph.has_edge(a, b)) && edge_deletion_ok(instance, &set)
        }
    }
}

/// Total cost of `deletion` under the instance weights.
pub fn deletion_weight(instance: &LabeledInstance, deletion: &Deletion) -> u64 {
    match deletion {
        Deletion::Vertices(v) => v.iter().map(|&x| instance.weights[x]).sum(),
        Deletion::Edges(e) => e.iter().map(|&(a, b)| instance.edge_weight(a, b)).sum(),
    }
}

/// Parses a claimed solution: whitespace-separated 1-indexed vertices, or
/// `u-v` pairs for edge problems. `#` starts a comment.
pub fn parse_solution(text: &str, edges: bool) -> Result<Deletion, FormatError> {
    let mut vertices = Vec::new();
    let mut pairs = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let err = |msg: String| FormatError { line: no + 1, msg };
        let body = raw.split('#').next().unwrap_or("");
        for tok in body.split_whitespace() {
            let one = |s: &str| match s.parse::<usize>() {
                Ok(v) if v > 0 => Ok(v - 1),
                _ => Err(err(format!("`{s}` is not a 1-indexed vertex"))),
            };
            if edges {
                let (a, b) = tok.split_once('-').ok_or_else(|| err(format!("`{tok}` is not an edge `u-v`")))?;
                pairs.push(edge_key(one(a)?, one(b)?));
            } else {
                vertices.push(one(tok)?);
            }
        }
    }
    Ok(if edges {
        Deletion::Edges(pairs)
    } else {
        Deletion::Vertices(vertices)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_path_example() {
        let inst = load_instance("p grl 3 2\ne 1 2\ne 2 3\nvs 2\n").unwrap();
        assert_eq!(inst.n(), 3);
        assert!(inst.graph.has_edge(0, 1) && inst.graph.has_edge(1, 2));
        assert_eq!(inst.s_vertices.ones().collect::<Vec<_>>(), vec![1]);
        assert_eq!(inst.weights, vec![1, 1, 1]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = load_instance("p grl 2 1\ne 1 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.msg.contains("loop"));
        assert_eq!(load_instance("p grl 2 2\ne 1 2\ne 2 1\n").unwrap_err().line, 3);
        assert_eq!(load_instance("p grl 2 0\nvs 3\n").unwrap_err().line, 2);
        assert_eq!(load_instance("c hello\np grl 2 0\nzz 1\n").unwrap_err().line, 3);
        assert!(load_instance("e 1 2\n").is_err());
        assert!(load_instance("p grl 2 2\ne 1 2\n").is_err());
        assert!(load_instance("p grl 3 1\ne 1 2\nes 2 3\n").is_err());
    }

    #[test]
    fn vertex_weight_line() {
        let inst = load_instance("p grl 2 0\nvw 2 5\n").unwrap();
        assert_eq!(inst.weights, vec![1, 5]);
    }

    #[test]
    fn serialisation_round_trips() {
        let text = "# example\np grl 4 4\npr resfes\nbd 3\ne 1 2\ne 2 3\ne 3 4\ne 4 1\nvw 3 7\nvs 1\nvt 4\nvf 2\nes 1 2\new 3 4 9\n";
        let inst = load_instance(text).unwrap();
        assert_eq!(inst.problem, Problem::Resfes);
        assert_eq!(inst.budget, 3);
        let again = load_instance(&serialize_instance(&inst)).unwrap();
        assert_eq!(again, inst);
    }

    #[test]
    fn records_in_both_forms() {
        let r = ResultRecord {
            problem: Problem::Soct,
            status: Status::Optimal,
            optimum_weight: Some(1),
            deletion_set: Some(DeletionSet::Vertices(vec![1])),
            budget: Some(1),
            decomposition_width_used: Some(2),
            stats: RecordStats::default(),
        };
        let text = r.to_text();
        assert!(text.contains("status: optimal\n"));
        assert!(text.contains("deletion_set: 1\n"));
        assert!(!text.contains("wall_ms"));
        let back: ResultRecord = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn solutions_parse_and_validate() {
        let inst = load_instance("p grl 3 3\ne 1 2\ne 2 3\ne 1 3\nvs 1\npr soct\n").unwrap();
        let d = parse_solution("2 # one vertex\n", false).unwrap();
        assert!(deletion_is_valid(&inst, &d));
        assert!(!deletion_is_valid(&inst, &Deletion::Vertices(vec![])));
        assert!(!deletion_is_valid(&inst, &Deletion::Vertices(vec![7])));
        assert_eq!(parse_solution("1-3 2-3", true).unwrap(), Deletion::Edges(vec![(0, 2), (1, 2)]));
        assert!(parse_solution("0", false).is_err());
    }
}
