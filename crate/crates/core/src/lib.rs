//! Paired disjoint path covers in bipartite transposition-like graphs.
//!
//! A rank-`n` transposition-like graph is a weld of `ℓ ≥ n` equal-size
//! rank-`(n−1)` graphs joined pairwise by perfect matchings. For bipartite
//! instances whose leaves are single vertices or even, [`pdpc::Solver`]
//! builds `n−1` vertex-disjoint paths that cover every vertex and join any
//! prescribed black sources to white targets.
//!
//! ```
//! use weldpath::{pdpc::Solver, verify::verify_pdpc, weld::transposition_graph};
//!
//! let tree = transposition_graph(4).unwrap();
//! let solver = Solver::new(&tree).unwrap();
//! let pairs = [(0, 1), (3, 5), (8, 6)];
//! let (cover, _trace) = solver.solve(&pairs).unwrap();
//! assert!(verify_pdpc(solver.graph(), &pairs, &cover.paths).accepted);
//! ```

pub mod base;
pub mod cli;
pub mod error;
pub mod graph;
pub mod pdpc;
pub mod sweep;
pub mod verify;
pub mod weld;

pub use error::Error;
pub use graph::{AssembledGraph, Color, Vertex};
