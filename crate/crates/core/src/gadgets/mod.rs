//! Lower-bound instance generators.
//!
//! Each generator turns a grid problem into an instance of one of the
//! deletion problems, together with a planted solution at the budget and,
//! where the layout is known, a path decomposition of bounded width.

mod cut;
mod generic;
mod grid;
mod verify;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, LabeledInstance, Problem, VertexId};
use crate::oracle::Deletion;
use crate::td::TreeDecomposition;

pub use cut::{construct_mwc_lb, construct_mwc_lb_weighted, construct_nmc_lb, mwc_parameters, MwcParameters};
pub use generic::{construct_lb_instance, wiring, witness_path_decomposition, WITNESS_WIDTH_FACTOR};
pub use grid::{all_grid_instances, gen_grid_instance, Cell, GridProblemInstance, GridVariant};
pub use verify::{legal_column_deletions, verify_gadget, GadgetFailure};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GadgetError {
    #[error("invalid grid instance: {0}")]
    InvalidGrid(String),
    #[error("cannot generate: {0}")]
    Unsatisfiable(String),
    #[error("{problem} needs a {expected:?} grid instance, got {got:?}")]
    WrongVariant {
        problem: Problem,
        expected: GridVariant,
        got: GridVariant,
    },
    #[error("no construction for {0}")]
    Unsupported(Problem),
    #[error("gadget {kind:?} has no variant {variant}")]
    NoSuchVariant { kind: GadgetKind, variant: u8 },
    #[error("no layout recorded for this instance")]
    NoLayout,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GadgetKind {
    ColumnSelector,
    RowSelector,
    Edge,
    Propagation,
}

impl std::str::FromStr for GadgetKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "column" | "column-selector" | "c" => Ok(GadgetKind::ColumnSelector),
            "row" | "row-selector" | "r" => Ok(GadgetKind::RowSelector),
            "edge" | "e" => Ok(GadgetKind::Edge),
            "propagation" | "p" => Ok(GadgetKind::Propagation),
            other => Err(format!("unknown gadget kind `{other}`")),
        }
    }
}

/// Facts about a generated instance, written next to it as a sidecar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetMeta {
    pub problem: Problem,
    pub k: usize,
    /// Number of edges of the source grid instance.
    pub m: usize,
    pub budget: u64,
    /// `(kind, variant)` for each gadget family used.
    pub gadgets: Vec<(GadgetKind, u8)>,
    /// The witness has width at most `width_factor * k`.
    pub width_factor: Option<usize>,
    pub witness_width: Option<usize>,
    pub mwc: Option<MwcParameters>,
}

#[derive(Debug, Clone)]
pub struct GeneratedInstance {
    pub instance: LabeledInstance,
    /// Deletion of total weight exactly `budget`, present when the source
    /// instance carried a planted solution.
    pub planted: Option<Deletion>,
    pub witness: Option<TreeDecomposition>,
    pub meta: GadgetMeta,
    /// Human-readable vertex names, indexed by vertex id.
    pub names: Vec<String>,
    pub(crate) layout: Option<generic::Layout>,
}

/// Incremental graph construction with vertex names and an S-label.
#[derive(Debug, Default)]
pub(crate) struct Builder {
    pub graph: Graph,
    pub s: Vec<VertexId>,
    pub names: Vec<String>,
}

impl Builder {
    pub fn vertex(&mut self, name: String, in_s: bool) -> VertexId {
        let v = self.graph.add_vertex();
        if in_s {
            self.s.push(v);
        }
        self.names.push(name);
        v
    }

    /// Adds `uv` unless it is already present.
    pub fn edge(&mut self, u: VertexId, v: VertexId) {
        if !self.graph.has_edge(u, v) {
            self.graph.add_edge(u, v).expect("distinct in-range endpoints");
        }
    }

    /// Joins `u` and `v` through a fresh middle vertex and returns it.
    pub fn path2(&mut self, u: VertexId, v: VertexId, name: String) -> VertexId {
        let x = self.vertex(name, false);
        self.edge(u, x);
        self.edge(x, v);
        x
    }
}
