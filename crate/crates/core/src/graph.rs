//! Simple undirected graphs with bitset adjacency rows.

use std::collections::VecDeque;

use crate::bits::VertexBits;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph<W> {
    n: usize,
    adj: Vec<W>,
}

impl<W: VertexBits> Graph<W> {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > W::capacity() {
            return Err(Error::GraphTooLarge {
                n,
                cap: W::capacity(),
            });
        }
        Ok(Graph {
            n,
            adj: vec![W::zero(); n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric predicate evaluated on every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut g = Self::new(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.adj[u] = g.adj[u].with(v);
                    g.adj[v] = g.adj[v].with(u);
                }
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, _| true)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)).filter(|&(u, v)| u != v))
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Adds `{u, v}`. Self loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::InvalidParameter(format!("self loop at vertex {u}")));
        }
        self.adj[u] = self.adj[u].with(v);
        self.adj[v] = self.adj[v].with(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn all(&self) -> W {
        W::full(self.n)
    }

    /// Open neighborhood as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> W {
        self.adj[v]
    }

    pub fn rows(&self) -> &[W] {
        &self.adj
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].has(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].size()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.size()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].ones().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Closed ball of radius two around `v` using only vertices of `within`
    /// (both as endpoints and as midpoints). `v` itself is always included.
    #[inline]
    pub fn ball2_within(&self, v: usize, within: W) -> W {
        let near = self.adj[v] & within;
        let mut ball = near.with(v);
        for w in near.ones() {
            ball = ball | (self.adj[w] & within);
        }
        ball
    }

    /// Same vertex set; `x ~ y` iff their distance in `self` is 1 or 2.
    pub fn square(&self) -> Graph<W> {
        let all = self.all();
        let adj = (0..self.n)
            .map(|v| self.ball2_within(v, all).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    pub fn complement(&self) -> Graph<W> {
        let all = self.all();
        let adj = (0..self.n)
            .map(|v| (all & !self.adj[v]).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `keep`, relabelled `0..|keep|` in ascending order.
    pub fn induced(&self, keep: &[usize]) -> Result<Graph<W>> {
        for &v in keep {
            self.check(v)?;
        }
        Graph::from_fn(keep.len(), |i, j| self.adjacent(keep[i], keep[j]))
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph<W>> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        Graph::from_edges(
            self.n,
            self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])),
        )
    }

    /// Breadth-first distances from `src`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for v in self.adj[u].ones() {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Graph64;

    #[test]
    fn square_of_nine_cycle_is_c9_12() {
        let c9 = Graph64::cycle(9).unwrap();
        let sq = c9.square();
        let expected =
            Graph64::from_fn(9, |u, v| matches!((v + 9 - u) % 9, 1 | 2 | 7 | 8)).unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn square_of_complete_is_complete() {
        let k = Graph64::complete(6).unwrap();
        assert_eq!(k.square(), k);
    }

    #[test]
    fn bfs_on_cycle() {
        let c9 = Graph64::cycle(9).unwrap();
        let d = c9.bfs_distances(0);
        assert_eq!(d[3], Some(3));
        assert_eq!(d[5], Some(4));
    }

    #[test]
    fn rejects_oversized_and_bad_edges() {
        assert!(matches!(
            Graph64::new(65),
            Err(Error::GraphTooLarge { n: 65, cap: 64 })
        ));
        let mut g = Graph64::new(3).unwrap();
        assert!(g.add_edge(0, 3).is_err());
        assert!(g.add_edge(1, 1).is_err());
    }

    #[test]
    fn complement_and_induced() {
        let c5 = Graph64::cycle(5).unwrap();
        assert_eq!(c5.complement().edge_count(), 5);
        let p = c5.induced(&[0, 1, 2]).unwrap();
        assert_eq!(p.edges(), vec![(0, 1), (1, 2)]);
    }
}
