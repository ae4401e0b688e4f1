//! Exact, approximate and kernelization algorithms for deleting vertices or
//! edges until a graph splits into `r` independent sets and `l` cliques,
//! for `r, l <= 2`.

pub mod approx;
pub mod brute;
pub mod deletion;
pub mod edge;
pub mod error;
pub mod flow;
pub mod gen;
pub mod graph;
pub mod kernel;
pub mod oct;
pub mod recognition;
pub mod report;
pub mod util;
pub mod vertex;

pub use deletion::{DeletionResult, EdgeDeletion, VertexDeletion};
pub use error::{Error, Result};
pub use graph::{parse_edge_list, Bipartition, Edge, Graph};
pub use recognition::{ICPartition, RLParams, SplitPartition};
