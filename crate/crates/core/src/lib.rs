//! Strong edge-coloring of large-girth regular bipartite graphs.
//!
//! - [`graph`]: simple and bipartite graphs, truncated BFS, girth, and the
//!   conflict graph (square of the line graph).
//! - [`generator`]: k-regular bipartite graphs of girth at least `g` on `2n`
//!   vertices, built degree by degree from a Hamiltonian cycle.
//! - [`bounds`]: the class-size bound `|C| <= m / (2k − 1)` and the resulting
//!   lower bound `chi'_s >= 2k` when `(2k − 1) ∤ m`.
//! - [`solver`]: exact and greedy strong coloring, verification, and
//!   last-color usage minimization.
//! - [`pipeline`]: generate, re-verify and record; experiment sweeps.
//! - [`dimacs`]: the graph file format.

pub mod bounds;
pub mod dimacs;
pub mod error;
pub mod generator;
pub mod graph;
pub mod pipeline;
pub mod rng;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, ConflictGraph, EdgeId, Girth, Graph};
