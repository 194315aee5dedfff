//! Maximum clique by branch and bound with a greedy-coloring bound;
//! independent sets and vertex covers reduce to it through the complement.

use super::{check_cap, greedy_color, Budget, Meter, SolveResult, Witness, DEFAULT_CAP};
use crate::bits::VertexBits;
use crate::error::Result;
use crate::graph::Graph;

struct CliqueSearch<'a, W> {
    g: &'a Graph<W>,
    meter: Meter,
    best: usize,
    best_set: W,
    root_bound: Option<usize>,
}

impl<W: VertexBits> CliqueSearch<'_, W> {
    fn expand(&mut self, chosen: W, cand: W, depth: usize) {
        if !self.meter.tick() {
            return;
        }
        let size = chosen.size();
        if size > self.best {
            self.best = size;
            self.best_set = chosen;
        }
        if cand.is_zero() {
            return;
        }
        let mut order = Vec::with_capacity(cand.size());
        let mut colors = Vec::with_capacity(cand.size());
        greedy_color(cand, |v| self.g.neighbors(v), &mut order, &mut colors);
        if depth == 0 {
            self.root_bound = Some(size + colors.last().copied().unwrap_or(0));
        }
        let mut rest = cand;
        for i in (0..order.len()).rev() {
            if size + colors[i] <= self.best {
                return;
            }
            let v = order[i];
            rest = rest.without(v);
            self.expand(chosen.with(v), rest & self.g.neighbors(v), depth + 1);
            if self.meter.exhausted() {
                return;
            }
        }
    }
}

/// Exact maximum clique. Graphs above 64 vertices need an explicit budget.
pub fn max_clique_exact<W: VertexBits>(g: &Graph<W>, budget: Budget) -> Result<SolveResult> {
    check_cap(g, DEFAULT_CAP, &budget)?;
    let mut search = CliqueSearch {
        g,
        meter: Meter::new(budget),
        best: 0,
        best_set: W::zero(),
        root_bound: None,
    };
    search.expand(W::zero(), g.all(), 0);
    let proven = !search.meter.exhausted();
    let optimum = search.best;
    Ok(SolveResult {
        optimum,
        witness: Witness::VertexSet(search.best_set.to_vec()),
        nodes: search.meter.nodes(),
        proven_optimal: proven,
        upper_bound: if proven {
            optimum
        } else {
            search.root_bound.unwrap_or(g.n()).max(optimum)
        },
    })
}

/// Exact maximum independent set (maximum clique of the complement).
pub fn max_independent_set_exact<W: VertexBits>(
    g: &Graph<W>,
    budget: Budget,
) -> Result<SolveResult> {
    max_clique_exact(&g.complement(), budget)
}

/// Exact minimum vertex cover: the complement of a maximum independent set.
/// When the budget runs out, `optimum` is the size of a valid cover and
/// `upper_bound` is `n` minus the independent-set upper bound, i.e. a
/// lower bound on the true cover size.
pub fn min_vertex_cover_exact<W: VertexBits>(g: &Graph<W>, budget: Budget) -> Result<SolveResult> {
    let mis = max_independent_set_exact(g, budget)?;
    let n = g.n();
    let independent = W::from_vertices(mis.witness.vertices().iter().copied());
    let cover = g.all() & !independent;
    Ok(SolveResult {
        optimum: n - mis.optimum,
        witness: Witness::VertexSet(cover.to_vec()),
        nodes: mis.nodes,
        proven_optimal: mis.proven_optimal,
        upper_bound: n - mis.upper_bound,
    })
}
