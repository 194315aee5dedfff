//! Exact solvers: maximum induced diameter-two subgraph, maximum clique,
//! maximum independent set / minimum vertex cover, and brute-force oracles.

mod brute;
mod clique;
mod diam2;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bits::VertexBits;
use crate::graph::Graph;

pub use brute::{max_diam2_bruteforce, BRUTE_FORCE_MAX_N};
pub use clique::{max_clique_exact, max_independent_set_exact, min_vertex_cover_exact};
pub use diam2::{is_diam2, max_diam2_exact};

/// Default vertex cap for unbudgeted exact solving.
pub const DEFAULT_CAP: usize = 64;

/// Search limits. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }

    pub fn is_unlimited(&self) -> bool {
        self.max_nodes.is_none() && self.max_time.is_none()
    }
}

/// Node counter that trips once the budget is spent.
#[derive(Debug)]
pub(crate) struct Meter {
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    exhausted: bool,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        Meter {
            nodes: 0,
            max_nodes: budget.max_nodes.unwrap_or(u64::MAX),
            deadline: budget.max_time.map(|t| Instant::now() + t),
            exhausted: false,
        }
    }

    /// Counts one node; returns `false` once the budget is exhausted.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        if self.nodes >= self.max_nodes {
            self.exhausted = true;
            return false;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.exhausted = true;
                }
            }
        }
        true
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted
    }
}

/// A common neighbor `via` of the non-adjacent pair `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Midpoint {
    pub u: usize,
    pub v: usize,
    pub via: usize,
}

/// A vertex set inducing a subgraph of diameter at most two, with one
/// midpoint inside the set for every non-adjacent pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diam2Witness {
    pub vertices: Vec<usize>,
    pub midpoints: Vec<Midpoint>,
}

impl Diam2Witness {
    /// Builds the certificate if `set` induces diameter at most two
    /// (the lowest-numbered midpoint is chosen for each pair).
    pub fn certify<W: VertexBits>(g: &Graph<W>, set: W) -> Option<Self> {
        let mut midpoints = Vec::new();
        for u in set.ones() {
            let far = set & !g.neighbors(u);
            for v in far.ones().filter(|&v| v > u) {
                let via = (g.neighbors(u) & g.neighbors(v) & set).first()?;
                midpoints.push(Midpoint { u, v, via });
            }
        }
        Some(Diam2Witness {
            vertices: set.to_vec(),
            midpoints,
        })
    }

    /// Re-checks the certificate against `g`: every non-adjacent pair is
    /// certified by a member adjacent to both, and nothing else is listed.
    pub fn verify<W: VertexBits>(&self, g: &Graph<W>) -> bool {
        let n = g.n();
        if self.vertices.iter().any(|&v| v >= n) {
            return false;
        }
        let set = W::from_vertices(self.vertices.iter().copied());
        if set.size() != self.vertices.len() {
            return false;
        }
        let mut expected = 0;
        for u in set.ones() {
            expected += (set & !g.neighbors(u)).ones().filter(|&v| v > u).count();
        }
        expected == self.midpoints.len()
            && self.midpoints.iter().all(|m| {
                m.u < m.v
                    && set.has(m.u)
                    && set.has(m.v)
                    && set.has(m.via)
                    && !g.adjacent(m.u, m.v)
                    && g.adjacent(m.u, m.via)
                    && g.adjacent(m.v, m.via)
            })
    }
}

/// What a solver hands back as evidence for its optimum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Diam2(Diam2Witness),
    VertexSet(Vec<usize>),
}

impl Witness {
    pub fn vertices(&self) -> &[usize] {
        match self {
            Witness::Diam2(w) => &w.vertices,
            Witness::VertexSet(v) => v,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    /// Best value found; optimal when `proven_optimal`.
    pub optimum: usize,
    pub witness: Witness,
    /// Search nodes expanded.
    pub nodes: u64,
    pub proven_optimal: bool,
    /// A valid upper bound on the true optimum (equals `optimum` when proven).
    pub upper_bound: usize,
}

/// Options for [`max_diam2_exact`].
#[derive(Clone, Debug)]
pub struct Diam2Options {
    pub budget: Budget,
    /// Largest `n` accepted without an explicit budget.
    pub cap: usize,
    /// Force this vertex into the solution. Only sound for vertex-transitive
    /// graphs such as circle graphs, where some optimum contains any vertex.
    pub root: Option<usize>,
    /// Return the lexicographically least optimum (costs extra searches).
    pub deterministic: bool,
}

impl Default for Diam2Options {
    fn default() -> Self {
        Diam2Options {
            budget: Budget::unlimited(),
            cap: DEFAULT_CAP,
            root: None,
            deterministic: false,
        }
    }
}

impl Diam2Options {
    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn rooted(mut self, root: usize) -> Self {
        self.root = Some(root);
        self
    }

    pub fn deterministic(mut self, on: bool) -> Self {
        self.deterministic = on;
        self
    }
}

/// The graph whose edges join pairs at distance one or two.
pub fn square_graph<W: VertexBits>(g: &Graph<W>) -> Graph<W> {
    g.square()
}

pub(crate) fn check_cap<W: VertexBits>(
    g: &Graph<W>,
    cap: usize,
    budget: &Budget,
) -> crate::Result<()> {
    if g.n() > cap && budget.is_unlimited() {
        Err(crate::Error::GraphTooLarge { n: g.n(), cap })
    } else {
        Ok(())
    }
}

/// Greedy sequential coloring of `cand` where `conflict[v]` lists the
/// vertices that may not share a color with `v`. Returns vertices in
/// coloring order with their (1-based) color numbers.
#[inline]
pub(crate) fn greedy_color<W: VertexBits>(
    cand: W,
    conflict: impl Fn(usize) -> W,
    order: &mut Vec<usize>,
    colors: &mut Vec<usize>,
) {
    order.clear();
    colors.clear();
    let mut uncolored = cand;
    let mut color = 0;
    while !uncolored.is_zero() {
        color += 1;
        let mut q = uncolored;
        while let Some(v) = q.first() {
            q = q.without(v) & !conflict(v);
            uncolored = uncolored.without(v);
            order.push(v);
            colors.push(color);
        }
    }
}
