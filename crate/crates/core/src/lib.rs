//! Exact domination-type parameters of graphs, middle graphs and related
//! transforms, with a harness that checks closed-form values, witness sets
//! and bounds for paired disjunctive domination of middle graphs.

pub mod cli;
pub mod dominate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod solve;
pub mod theorems;
pub mod transform;
pub mod vertex_set;

pub use dominate::{check, DominationKind, DominationVerdict};
pub use error::{Error, Result};
pub use generators::FamilySpec;
pub use graph::{Graph, Vertex};
pub use solve::{minimum, minimum_restricted, SolveOptions, SolveResult, SolveStatus};
pub use transform::{middle_graph, MiddleGraph, Provenance};
pub use vertex_set::VertexSet;
