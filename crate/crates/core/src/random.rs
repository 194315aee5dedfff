//! Seeded instance generators. All randomness flows from a SplitMix64
//! stream so runs are reproducible across platforms.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
pub use rand_xoshiro::SplitMix64;

use crate::bits::VertexBits;
use crate::coloring::{two_color_extremal, EdgeColoring};
use crate::error::Result;
use crate::graph::Graph;

pub fn rng(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

/// `G(n, p)`.
pub fn random_graph<W: VertexBits>(rng: &mut SplitMix64, n: usize, p: f64) -> Result<Graph<W>> {
    Graph::from_fn(n, |_, _| rng.random_bool(p))
}

/// Every edge gets an independent uniform color.
pub fn random_coloring(rng: &mut SplitMix64, n: usize, k: usize) -> Result<EdgeColoring> {
    EdgeColoring::from_fn(n, k, |_, _| rng.random_range(0..k))
}

/// A 2-coloring drawn from a mixture of models, so that both the trivial
/// (a class already spans) and the peeling branch get exercised:
///
/// 0. independent edges with red probability in `[0.05, 0.95]`;
/// 1. the balanced block construction under a random relabelling, with
///    each edge flipped with probability up to 0.08;
/// 2. a random partition into 2..=5 blocks, one random color per block
///    pair and uniform colors inside blocks.
pub fn random_two_coloring(rng: &mut SplitMix64, n: usize) -> Result<EdgeColoring> {
    match rng.random_range(0..3u8) {
        0 => {
            let p = rng.random_range(0.05..0.95);
            EdgeColoring::from_fn(n, 2, |_, _| usize::from(!rng.random_bool(p)))
        }
        1 if n >= 4 => {
            let base = two_color_extremal(n)?.coloring;
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(rng);
            let flip = rng.random_range(0.0..0.08);
            EdgeColoring::from_fn(n, 2, |u, v| {
                let c = base.color(perm[u], perm[v]);
                if rng.random_bool(flip) {
                    1 - c
                } else {
                    c
                }
            })
        }
        _ => {
            let blocks = rng.random_range(2..=5usize);
            let block_of: Vec<usize> = (0..n).map(|_| rng.random_range(0..blocks)).collect();
            let pair_color: Vec<usize> = (0..blocks * blocks)
                .map(|_| rng.random_range(0..2))
                .collect();
            EdgeColoring::from_fn(n, 2, |u, v| {
                let (a, b) = (block_of[u].min(block_of[v]), block_of[u].max(block_of[v]));
                if a == b {
                    rng.random_range(0..2)
                } else {
                    pair_color[a * blocks + b]
                }
            })
        }
    }
}
