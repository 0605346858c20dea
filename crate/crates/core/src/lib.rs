//! Exact algorithms for subset feedback and odd-cycle deletion problems on
//! graphs of bounded treewidth.
//!
//! Weighted Subset Feedback Vertex Set and Weighted Subset Odd Cycle
//! Transversal are solved by a dynamic program over a nice tree
//! decomposition ([`dp`]) that keeps one heaviest partial solution per
//! signature. Node Multiway Cut, Edge Multiway Cut and Restricted Edge-Subset
//! Feedback Edge Set are solved by reduction to weighted Subset FVS
//! ([`reductions`]). [`oracle`] holds exhaustive reference solvers, and
//! [`gadgets`] builds and checks the lower-bound instance families.
//!
//! ```
//! use twdp::dp::solve_soct;
//! use twdp::graph::{Graph, LabeledInstance, Problem};
//! use twdp::td::{heuristic_td, nicify};
//!
//! let triangle = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
//! let instance = LabeledInstance::new(triangle, Problem::Soct)
//!     .with_s([0])
//!     .with_weights(vec![5, 1, 2]);
//! let nice = nicify(&heuristic_td(&instance.graph), &instance.graph).unwrap();
//! let solution = solve_soct(&instance, &nice).unwrap();
//! assert_eq!(solution.deletion_weight, 1);
//! ```

pub mod cli;
pub mod dp;
pub mod format;
pub mod gadgets;
pub mod graph;
pub mod oracle;
pub mod reductions;
pub mod td;
