//! Exact independent-set counting and a toolkit for checking how the sign of
//!
//! ```text
//! Δ(G, A, B) = σ(G₋A)·σ(G₋B) − σ(G)·σ(G₋A₋B)
//! ```
//!
//! depends on the lengths of the paths between the vertex sets `A` and `B`.
//! Here `σ(G)` is the number of independent vertex sets of `G` (the
//! Merrifield-Simmons index).
//!
//! ```
//! use merrifield::{delta_vertices, path_graph, MemoCache};
//!
//! // endpoints of a path on four vertices are at odd distance
//! let g = path_graph(4);
//! let d = delta_vertices(&g, 0, 3, &mut MemoCache::new());
//! assert_eq!(d.to_string(), "+1");
//! ```
//!
//! The runnable programs under `examples/` walk through each capability;
//! the `msverify` binary exposes the sweeps on the command line.

pub mod cli;
pub mod delta;
pub mod enumeration;
pub mod error;
pub mod format;
pub mod graph;
pub mod parity;
pub mod sigma;
pub mod verify;

pub use delta::{
    delta_sets, delta_vertices, predict_sign, reduce_to_ab_components, DeltaValue, Sign,
    SignPrediction,
};
pub use error::{EnumerationError, GraphError, ParseError, SigmaError};
pub use format::{emit_graph6, parse_graph6};
pub use graph::{
    bipartition, complete_graph, components, cycle_graph, delete, disjoint_union, distance,
    neighborhood, path_graph, Distance, Graph, VertexSet,
};
pub use parity::{classify, ParityClass, PathBudget};
pub use sigma::{sigma, sigma_naive, Count, MemoCache, SharedMemoCache};
