//! Monochromatic diameter-two subgraphs of edge-colored complete graphs.
//!
//! The crate builds extremal k-colorings of `K_n` (circulant constructions
//! for `k >= 3` and the block construction for `k = 2`), extracts a large
//! monochromatic diameter-two subgraph from any 2-coloring, and ships exact
//! branch-and-bound solvers with brute-force oracles so every bound can be
//! checked on concrete instances.
//!
//! Graph-level code is generic over the machine word used as a vertex
//! bitset (see [`VertexBits`]); [`Graph64`] and [`Graph128`] are the two
//! instantiations used in practice.

pub mod bits;
pub mod circle;
pub mod coloring;
pub mod cyclic;
pub mod dimacs;
pub mod error;
pub mod graph;
pub mod guarantee;
pub mod identities;
pub mod kcol;
pub mod random;
pub mod solve;
pub mod verify;

pub use bits::VertexBits;
pub use circle::CircleGraph;
pub use coloring::{ColorClassView, DifferenceConstruction, EdgeColoring, TwoColorExtremal};
pub use cyclic::{CyclicSet, ResidueInterval};
pub use error::{Error, Result};
pub use graph::Graph;
pub use solve::{Budget, Diam2Options, Diam2Witness, SolveResult};

/// Graphs on at most 64 vertices.
pub type Graph64 = Graph<u64>;
/// Graphs on at most 128 vertices.
pub type Graph128 = Graph<u128>;

/// Runs `$body` with `$w` bound to the smallest bitset word holding `$n`
/// vertices; evaluates to `Err(GraphTooLarge)` beyond 128.
#[macro_export]
macro_rules! dispatch_bits {
    ($n:expr, $w:ident => $body:expr) => {{
        let n: usize = $n;
        if n <= 64 {
            #[allow(dead_code)]
            type $w = u64;
            $body
        } else if n <= 128 {
            #[allow(dead_code)]
            type $w = u128;
            $body
        } else {
            Err($crate::Error::GraphTooLarge { n, cap: 128 })
        }
    }};
}
