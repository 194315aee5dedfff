//! Branch and bound for the largest vertex set inducing diameter <= 2.
//!
//! Every feasible set is a clique of the square graph, so the search is a
//! maximum-clique search (greedy-coloring bound) over a square that is
//! recomputed at each node using only vertices still available as
//! midpoints. A pair of chosen vertices with no available midpoint prunes
//! the node; candidates that cannot reach every chosen vertex are dropped.

use super::{
    check_cap, greedy_color, Budget, Diam2Options, Diam2Witness, Meter, SolveResult, Witness,
};
use crate::bits::VertexBits;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// True iff `set` induces a subgraph with all pairwise distances <= 2.
/// The empty set and singletons qualify.
pub fn is_diam2<W: VertexBits>(g: &Graph<W>, set: W) -> bool {
    set.ones().all(|u| {
        let ball = g.ball2_within(u, set);
        (set & !ball).is_zero()
    })
}

struct Search<'a, W> {
    g: &'a Graph<W>,
    meter: Meter,
    best: usize,
    best_set: W,
    /// Stop as soon as a set of this size is found.
    target: Option<usize>,
    root_bound: Option<usize>,
    order: Vec<Vec<usize>>,
    colors: Vec<Vec<usize>>,
    rows: Vec<Vec<W>>,
}

impl<'a, W: VertexBits> Search<'a, W> {
    fn new(g: &'a Graph<W>, budget: Budget) -> Self {
        Search {
            g,
            meter: Meter::new(budget),
            best: 0,
            best_set: W::zero(),
            target: None,
            root_bound: None,
            order: Vec::new(),
            colors: Vec::new(),
            rows: Vec::new(),
        }
    }

    fn done(&self) -> bool {
        self.meter.exhausted() || self.target.is_some_and(|t| self.best >= t)
    }

    fn record(&mut self, set: W) {
        let size = set.size();
        if size > self.best && is_diam2(self.g, set) {
            self.best = size;
            self.best_set = set;
        }
    }

    fn expand(&mut self, chosen: W, mut cand: W, depth: usize) {
        if !self.meter.tick() {
            return;
        }
        // Shrink candidates until every chosen vertex can reach every
        // remaining vertex through available midpoints.
        loop {
            let avail = chosen | cand;
            let mut next = cand;
            for u in chosen.ones() {
                let reach = self.g.ball2_within(u, avail);
                if !(chosen & !reach).is_zero() {
                    return;
                }
                next = next & reach;
            }
            if next == cand {
                break;
            }
            cand = next;
        }
        let size = chosen.size();
        if size > self.best {
            self.record(chosen);
            if self.done() {
                return;
            }
        }
        if cand.is_zero() || size + cand.size() <= self.best {
            if depth == 0 {
                self.root_bound = Some(size.max(self.best));
            }
            return;
        }

        if self.rows.len() <= depth {
            self.rows.push(vec![W::zero(); self.g.n()]);
            self.order.push(Vec::new());
            self.colors.push(Vec::new());
        }
        let avail = chosen | cand;
        let mut rows = std::mem::take(&mut self.rows[depth]);
        for v in cand.ones() {
            rows[v] = self.g.ball2_within(v, avail) & cand;
        }
        let mut order = std::mem::take(&mut self.order[depth]);
        let mut colors = std::mem::take(&mut self.colors[depth]);
        greedy_color(cand, |v| rows[v], &mut order, &mut colors);
        if depth == 0 {
            self.root_bound = Some(size + colors.last().copied().unwrap_or(0));
        }

        let mut rest = cand;
        for i in (0..order.len()).rev() {
            if size + colors[i] <= self.best {
                break;
            }
            let v = order[i];
            rest = rest.without(v);
            self.expand(chosen.with(v), rest & rows[v], depth + 1);
            if self.done() {
                break;
            }
        }
        self.rows[depth] = rows;
        self.order[depth] = order;
        self.colors[depth] = colors;
    }
}

/// Exact maximum induced diameter-two subgraph.
///
/// Without a budget, graphs above `options.cap` vertices are refused. With
/// a budget the search may stop early; the result then carries the best
/// incumbent, `proven_optimal = false` and the root relaxation bound.
pub fn max_diam2_exact<W: VertexBits>(g: &Graph<W>, options: &Diam2Options) -> Result<SolveResult> {
    check_cap(g, options.cap, &options.budget)?;
    let n = g.n();
    let (start, cand) = match options.root {
        Some(r) if r >= n => return Err(Error::VertexOutOfRange { vertex: r, n }),
        Some(r) => (W::singleton(r), g.ball2_within(r, g.all()).without(r)),
        None => (W::zero(), g.all()),
    };
    let mut search = Search::new(g, options.budget);
    if n > 0 {
        search.expand(start, cand, 0);
    }
    let proven = !search.meter.exhausted();
    let mut nodes = search.meter.nodes();
    let mut best_set = search.best_set;
    if proven && options.deterministic && search.best > 0 {
        let (set, extra) = lexicographically_least(g, search.best);
        best_set = set;
        nodes += extra;
    }
    let optimum = best_set.size();
    let upper_bound = if proven {
        optimum
    } else {
        search.root_bound.unwrap_or(n).max(optimum)
    };
    let witness = Diam2Witness::certify(g, best_set)
        .ok_or_else(|| Error::Invariant("diameter-two search returned an infeasible set".into()))?;
    Ok(SolveResult {
        optimum,
        witness: Witness::Diam2(witness),
        nodes,
        proven_optimal: proven,
        upper_bound,
    })
}

/// Greedily fixes vertices in increasing order, keeping each one whenever a
/// feasible set of size `opt` still exists.
fn lexicographically_least<W: VertexBits>(g: &Graph<W>, opt: usize) -> (W, u64) {
    let square = g.square();
    let mut fixed = W::zero();
    let mut excluded = W::zero();
    let mut nodes = 0;
    for v in 0..g.n() {
        if fixed.size() == opt {
            break;
        }
        let trial = fixed.with(v);
        let mut cand = g.all() & !excluded & !trial;
        for u in trial.ones() {
            cand = cand & square.neighbors(u);
        }
        let compatible = fixed.ones().all(|u| square.adjacent(u, v));
        let mut found = false;
        if compatible {
            let mut search = Search::new(g, Budget::unlimited());
            search.best = opt - 1;
            search.target = Some(opt);
            search.expand(trial, cand, 0);
            nodes += search.meter.nodes();
            found = search.best >= opt;
        }
        if found {
            fixed = trial;
        } else {
            excluded = excluded.with(v);
        }
    }
    (fixed, nodes)
}
