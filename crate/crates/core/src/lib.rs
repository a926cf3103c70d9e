//! Signed Max Cut above the quarter bound `ptq(G) = 2m + n - t`.
//!
//! The library decides whether a connected signed graph has a balanced
//! subgraph with at least `(ptq(G) + k) / 4` edges, in `O*(8^k)` time, and can
//! shrink an instance to an equivalent kernel with `O(k^3)` vertices.

pub mod decomposition;
pub mod error;
pub mod format;
pub mod fpt;
pub mod generate;
pub mod graph;
pub mod kernel;
pub mod mcwv;
pub mod oneway;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{Assignment, BalanceWitness, QuarterBound, Side, Sign, SignedGraph, Vertex};
