//! Circle (circulant) graphs on `Z_n` determined by a difference set.

use crate::bits::VertexBits;
use crate::cyclic::CyclicSet;
use crate::dimacs::write_dimacs;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The circle graph on `n` vertices determined by `S ⊆ [1, floor(n/2)]`:
/// `x ~ y` iff `x - y` or `y - x` lies in `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleGraph {
    diffs: CyclicSet,
}

impl CircleGraph {
    pub fn new(diffs: CyclicSet) -> Result<Self> {
        let n = diffs.modulus();
        if let Some(bad) = diffs.iter().find(|&d| d == 0 || d > n / 2) {
            return Err(Error::InvalidParameter(format!(
                "difference {bad} outside [1,{}]",
                n / 2
            )));
        }
        Ok(CircleGraph { diffs })
    }

    /// Accepts any set of residues and folds each nonzero `d` to `min(d, n-d)`.
    pub fn from_connection_set(set: &CyclicSet) -> Result<Self> {
        let n = set.modulus();
        let folded = set.iter().filter(|&d| d != 0).map(|d| d.min(n - d) as i64);
        Self::new(CyclicSet::from_values(n, folded)?)
    }

    pub fn n(&self) -> usize {
        self.diffs.modulus()
    }

    pub fn diffs(&self) -> &CyclicSet {
        &self.diffs
    }

    /// `S u -S`: the residues joined to 0.
    pub fn connection_set(&self) -> CyclicSet {
        self.diffs
            .union(&self.diffs.negate())
            .expect("same modulus")
    }

    fn check(&self, x: usize) -> Result<()> {
        if x < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: x,
                n: self.n(),
            })
        }
    }

    pub fn adjacency(&self, x: usize, y: usize) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        let n = self.n();
        let d = (x + n - y) % n;
        Ok(x != y && (self.diffs.contains(d as i64) || self.diffs.contains(-(d as i64))))
    }

    /// `N_x(C,1)`.
    pub fn closed_nbhd1(&self, x: usize) -> Result<CyclicSet> {
        self.check(x)?;
        let mut s = self.connection_set();
        s.insert(0);
        Ok(s.rotate(x as i64))
    }

    /// `N_0(C,2) = {0} u S u -S u (S+S) u (-S+S) u (-S-S)`.
    pub fn ball2_at_zero(&self) -> CyclicSet {
        let s = &self.diffs;
        let neg = s.negate();
        let mut out = CyclicSet::from_values(self.n(), [0]).expect("valid modulus");
        for part in [
            s.clone(),
            neg.clone(),
            s.sum_set(s).expect("same modulus"),
            neg.sum_set(s).expect("same modulus"),
            neg.sum_set(&neg).expect("same modulus"),
        ] {
            out = out.union(&part).expect("same modulus");
        }
        out
    }

    /// `N_x(C,2)` by breadth-first search to depth two.
    pub fn closed_nbhd2_bfs(&self, x: usize) -> Result<CyclicSet> {
        self.check(x)?;
        let conn = self.connection_set();
        let mut ball = CyclicSet::from_values(self.n(), [x as i64])?;
        for d1 in conn.iter() {
            let y = x as i64 + d1 as i64;
            ball.insert(y);
            for d2 in conn.iter() {
                ball.insert(y + d2 as i64);
            }
        }
        Ok(ball)
    }

    /// `N_x(C,2) = x + N_0(C,2)`.
    pub fn closed_nbhd2(&self, x: usize) -> Result<CyclicSet> {
        self.check(x)?;
        let ball = self.ball2_at_zero().rotate(x as i64);
        debug_assert_eq!(ball, self.closed_nbhd2_bfs(x)?, "formula and BFS disagree");
        Ok(ball)
    }

    /// `N^c_0(C,2)`: residues at distance at least three from 0.
    pub fn second_nbhd_complement(&self) -> CyclicSet {
        let ball = self.ball2_at_zero();
        debug_assert_eq!(Some(&ball), self.closed_nbhd2_bfs(0).ok().as_ref());
        ball.complement()
    }

    /// `J(C)`: the circle graph determined by `N^c_0(C,2) ∩ [1, floor(n/2)]`.
    pub fn j_graph(&self) -> CircleGraph {
        CircleGraph {
            diffs: self.second_nbhd_complement().lower_half(),
        }
    }

    /// Edges `(u, v)`, `u < v`, sorted ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let conn = self.connection_set();
        let mut out = Vec::new();
        for u in 0..n {
            for d in conn.iter() {
                let v = (u + d) % n;
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.n() * self.connection_set().len() / 2
    }

    pub fn to_graph<W: VertexBits>(&self) -> Result<Graph<W>> {
        Graph::from_edges(self.n(), self.edges())
    }

    pub fn to_dimacs(&self) -> String {
        write_dimacs(self.n(), &self.edges())
    }
}
