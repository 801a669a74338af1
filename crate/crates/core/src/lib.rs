//! Exact combinatorial searchers, solvers and certificate validators for a
//! suite of open problems on graph colorings and flows, built around a shared
//! multigraph model with graph6 corpus ingestion.

pub mod alon_tarsi;
pub mod classify;
pub mod coloring;
pub mod edge_coloring;
pub mod flow_pair;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod group_conn;
pub mod homogeneous;
pub mod ramsey;
pub mod strong_color;
pub mod strong_edge;
pub mod subgraph;

pub use graph::{Graph, GraphError, RandomSeed};
