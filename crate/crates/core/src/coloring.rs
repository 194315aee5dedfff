//! Edge colorings of `K_n` and the extremal constructions.

use serde::Serialize;

use crate::bits::VertexBits;
use crate::circle::CircleGraph;
use crate::cyclic::{CyclicSet, ResidueInterval, MAX_MODULUS};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Color id of red edges in 2-colorings.
pub const RED: usize = 0;
/// Color id of blue edges in 2-colorings.
pub const BLUE: usize = 1;

/// Largest supported number of colors (ids must fit in a byte).
pub const MAX_COLORS: usize = 256;

/// Assignment of a color in `0..k` to every edge `{u, v}` of `K_n`,
/// stored row-major over the upper triangle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    k: usize,
    colors: Vec<u8>,
}

impl EdgeColoring {
    fn validate_shape(n: usize, k: usize) -> Result<()> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("need n >= 2, got {n}")));
        }
        if k == 0 || k > MAX_COLORS {
            return Err(Error::InvalidParameter(format!(
                "color count {k} outside 1..={MAX_COLORS}"
            )));
        }
        Ok(())
    }

    /// Every edge gets `color`.
    pub fn uniform(n: usize, k: usize, color: usize) -> Result<Self> {
        Self::from_fn(n, k, |_, _| color)
    }

    /// Colors each edge `{u, v}` (called with `u < v`) by `f(u, v)`.
    pub fn from_fn(n: usize, k: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        Self::validate_shape(n, k)?;
        let mut colors = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                let c = f(u, v);
                if c >= k {
                    return Err(Error::InvalidParameter(format!(
                        "color {c} on edge {{{u},{v}}} outside 0..{k}"
                    )));
                }
                colors.push(c as u8);
            }
        }
        Ok(EdgeColoring { n, k, colors })
    }

    /// Builds from the upper-triangle rows (`rows[u]` lists colors of
    /// `{u,u+1}, .., {u,n-1}`).
    pub fn from_rows(n: usize, k: usize, rows: &[Vec<usize>]) -> Result<Self> {
        Self::validate_shape(n, k)?;
        if rows.len() != n - 1 || rows.iter().enumerate().any(|(u, r)| r.len() != n - 1 - u) {
            return Err(Error::InvalidParameter("ragged upper triangle".into()));
        }
        Self::from_fn(n, k, |u, v| rows[u][v - u - 1])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    fn index(&self, u: usize, v: usize) -> usize {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        debug_assert!(u != v && v < self.n);
        u * (2 * self.n - u - 1) / 2 + (v - u - 1)
    }

    /// Color of `{u, v}`; requires `u != v`, both below `n`.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> usize {
        assert!(u != v && u < self.n && v < self.n, "no edge {{{u},{v}}}");
        self.colors[self.index(u, v)] as usize
    }

    pub fn set_color(&mut self, u: usize, v: usize, color: usize) -> Result<()> {
        if u == v || u >= self.n || v >= self.n || color >= self.k {
            return Err(Error::InvalidParameter(format!(
                "cannot color {{{u},{v}}} with {color}"
            )));
        }
        let i = self.index(u, v);
        self.colors[i] = color as u8;
        Ok(())
    }

    pub fn class(&self, color: usize) -> ColorClassView<'_> {
        ColorClassView {
            coloring: self,
            color,
        }
    }

    pub fn class_graph<W: VertexBits>(&self, color: usize) -> Result<Graph<W>> {
        self.class(color).to_graph()
    }

    /// Upper-triangle rows, `rows()[u][i]` being the color of `{u, u+1+i}`.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n.saturating_sub(1))
            .map(|u| (u + 1..self.n).map(|v| self.color(u, v)).collect())
            .collect()
    }
}

/// One color class of an [`EdgeColoring`] viewed as a graph.
#[derive(Clone, Copy, Debug)]
pub struct ColorClassView<'a> {
    coloring: &'a EdgeColoring,
    color: usize,
}

impl ColorClassView<'_> {
    pub fn color(&self) -> usize {
        self.color
    }

    pub fn n(&self) -> usize {
        self.coloring.n
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.coloring.color(u, v) == self.color
    }

    pub fn to_graph<W: VertexBits>(&self) -> Result<Graph<W>> {
        Graph::from_fn(self.n(), |u, v| self.adjacent(u, v))
    }
}

/// Colors `{u, v}` by the index of the set containing the folded difference
/// `min(|u-v| mod n, n - |u-v| mod n)`. The sets must partition `[1, floor(n/2)]`.
pub fn from_difference_partition(n: usize, sets: &[CyclicSet]) -> Result<EdgeColoring> {
    if sets.is_empty() {
        return Err(Error::InvalidParameter("no difference sets".into()));
    }
    let half = n / 2;
    let mut owner = vec![None; half + 1];
    let mut overlapping = Vec::new();
    for (i, set) in sets.iter().enumerate() {
        if set.modulus() != n {
            return Err(Error::ModulusMismatch(set.modulus(), n));
        }
        for d in set.iter() {
            if d == 0 || d > half {
                return Err(Error::InvalidParameter(format!(
                    "difference {d} of set {i} outside [1,{half}]"
                )));
            }
            if owner[d].is_some() {
                overlapping.push(d);
            } else {
                owner[d] = Some(i);
            }
        }
    }
    let uncovered: Vec<usize> = (1..=half).filter(|&d| owner[d].is_none()).collect();
    if !overlapping.is_empty() || !uncovered.is_empty() {
        overlapping.sort_unstable();
        overlapping.dedup();
        return Err(Error::PartitionInvalid {
            half,
            overlapping,
            uncovered,
        });
    }
    EdgeColoring::from_fn(n, sets.len(), |u, v| {
        let d = v - u;
        owner[d.min(n - d)].expect("checked coverage")
    })
}

/// The balanced 4-block 2-coloring together with its blocks.
#[derive(Clone, Debug)]
pub struct TwoColorExtremal {
    pub coloring: EdgeColoring,
    pub r1: Vec<usize>,
    pub b1: Vec<usize>,
    pub b2: Vec<usize>,
    pub r2: Vec<usize>,
}

/// Splits `0..n` into contiguous blocks `R1, B1, B2, R2` (larger blocks first)
/// and colors an edge red iff it joins `R1-B1`, `B1-B2` or `B2-R2`.
pub fn two_color_extremal(n: usize) -> Result<TwoColorExtremal> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "two-color construction needs n >= 4, got {n}"
        )));
    }
    let mut block_of = Vec::with_capacity(n);
    for b in 0..4 {
        let size = n / 4 + usize::from(b < n % 4);
        block_of.extend(std::iter::repeat_n(b, size));
    }
    // block ids: 0 = R1, 1 = B1, 2 = B2, 3 = R2
    let coloring = EdgeColoring::from_fn(n, 2, |u, v| {
        let (a, b) = (block_of[u].min(block_of[v]), block_of[u].max(block_of[v]));
        if b == a + 1 {
            RED
        } else {
            BLUE
        }
    })?;
    let members = |b: usize| (0..n).filter(|&v| block_of[v] == b).collect::<Vec<_>>();
    Ok(TwoColorExtremal {
        coloring,
        r1: members(0),
        b1: members(1),
        b2: members(2),
        r2: members(3),
    })
}

/// Structural role of a difference class, used to attach the right bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ClassKind {
    /// `[1, s]` in the three-color construction.
    ThreeLow,
    /// `[s+1, 5s/3] u [8s/3+1, 3s]`.
    ThreeSplit,
    /// `[5s/3+1, 8s/3]`.
    ThreeMiddle,
    /// `[1, 2s-1]_2`.
    OddLow,
    /// `[2, 2s]_2`.
    EvenLow,
    /// `[js+1, (j+1)s]`.
    Block { j: usize },
    /// `[(2k-6)s/3+2, 2ks/3]_2`, present when `3 | k`.
    ParityUpper,
    /// `[(2k-6)s/3+1, 2ks/3-1]_2`, present when `3 | k`.
    ParityLower,
}

/// One color class of a circulant construction.
#[derive(Clone, Debug)]
pub struct ColorClassSpec {
    /// 1-based label `C_i`; the color id is `label - 1`.
    pub label: usize,
    /// Generator in interval notation, e.g. `[1,3]_2`.
    pub generator: String,
    pub diffs: CyclicSet,
    pub kind: ClassKind,
}

impl ColorClassSpec {
    pub fn circle(&self) -> CircleGraph {
        CircleGraph::new(self.diffs.clone()).expect("construction differences lie in [1,n/2]")
    }
}

/// A k-coloring of `K_n` whose classes are circle graphs.
#[derive(Clone, Debug)]
pub struct DifferenceConstruction {
    pub k: usize,
    pub s: usize,
    pub classes: Vec<ColorClassSpec>,
    pub coloring: EdgeColoring,
}

impl DifferenceConstruction {
    pub fn n(&self) -> usize {
        self.coloring.n()
    }

    fn assemble(k: usize, s: usize, mut classes: Vec<ColorClassSpec>) -> Result<Self> {
        classes.sort_by_key(|c| c.label);
        if classes.len() != k || classes.iter().enumerate().any(|(i, c)| c.label != i + 1) {
            return Err(Error::Invariant(format!(
                "construction produced labels {:?} for k = {k}",
                classes.iter().map(|c| c.label).collect::<Vec<_>>()
            )));
        }
        if let Some(c) = classes.iter().find(|c| c.diffs.is_empty()) {
            return Err(Error::Invariant(format!("class C_{} is empty", c.label)));
        }
        let n = classes[0].diffs.modulus();
        let sets: Vec<CyclicSet> = classes.iter().map(|c| c.diffs.clone()).collect();
        let coloring = from_difference_partition(n, &sets).map_err(|e| match e {
            Error::PartitionInvalid { .. } => Error::Invariant(format!("construction: {e}")),
            other => other,
        })?;
        Ok(DifferenceConstruction {
            k,
            s,
            classes,
            coloring,
        })
    }
}

fn interval_class(
    label: usize,
    kind: ClassKind,
    a: usize,
    b: usize,
    p: usize,
    n: usize,
) -> Result<ColorClassSpec> {
    let iv = ResidueInterval::new(a, b, p, n)?;
    Ok(ColorClassSpec {
        label,
        generator: iv.to_string(),
        diffs: iv.materialize(),
        kind,
    })
}

fn check_modulus(n: usize) -> Result<()> {
    if n > MAX_MODULUS {
        Err(Error::ModulusOutOfRange(n, MAX_MODULUS))
    } else {
        Ok(())
    }
}

/// Three circle graphs on `n = 6s+1` vertices: `N1 = [1,s]`,
/// `N2 = [s+1,5s/3] u [8s/3+1,3s]`, `N3 = [5s/3+1,8s/3]`.
pub fn three_color_construction(s: usize) -> Result<DifferenceConstruction> {
    if s == 0 || !s.is_multiple_of(3) {
        return Err(Error::InvalidParameter(format!(
            "three-color construction needs a positive multiple of 3, got s = {s}"
        )));
    }
    let n = 6 * s + 1;
    check_modulus(n)?;
    let t = s / 3;
    let low = interval_class(1, ClassKind::ThreeLow, 1, s, 1, n)?;
    let head = ResidueInterval::unit(s + 1, 5 * t, n)?;
    let tail = ResidueInterval::unit(8 * t + 1, 3 * s, n)?;
    let split = ColorClassSpec {
        label: 2,
        generator: format!("{head} u {tail}"),
        diffs: head.materialize().union(&tail.materialize())?,
        kind: ClassKind::ThreeSplit,
    };
    let middle = interval_class(3, ClassKind::ThreeMiddle, 5 * t + 1, 8 * t, 1, n)?;
    DifferenceConstruction::assemble(3, s, vec![low, split, middle])
}

/// `k >= 4` circle graphs on `n = 2sk+1` vertices partitioning `[1, ks]`.
///
/// `C_1 = [1,2s-1]_2`, `C_2 = [2,2s]_2`, `C_{j+1} = [js+1,(j+1)s]` for
/// `2 <= j <= k-1` except, when `3 | k`, the two blocks below `2ks/3` are
/// replaced by the parity classes `C_{2k/3-1} = [(2k-6)s/3+2, 2ks/3]_2`
/// and `C_{2k/3} = [(2k-6)s/3+1, 2ks/3-1]_2`.
pub fn k_color_construction(k: usize, s: usize) -> Result<DifferenceConstruction> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!(
            "k-color construction needs k >= 4, got {k}"
        )));
    }
    if s == 0 {
        return Err(Error::InvalidParameter("s must be positive".into()));
    }
    let n = 2 * s * k + 1;
    check_modulus(n)?;
    let mut classes = vec![
        interval_class(1, ClassKind::OddLow, 1, 2 * s - 1, 2, n)?,
        interval_class(2, ClassKind::EvenLow, 2, 2 * s, 2, n)?,
    ];
    let parity_at = k.is_multiple_of(3).then_some(2 * k / 3);
    if let Some(m) = parity_at {
        classes.push(interval_class(
            m - 1,
            ClassKind::ParityUpper,
            (m - 2) * s + 2,
            m * s,
            2,
            n,
        )?);
        classes.push(interval_class(
            m,
            ClassKind::ParityLower,
            (m - 2) * s + 1,
            m * s - 1,
            2,
            n,
        )?);
    }
    for j in 2..k {
        if parity_at.is_some_and(|m| j + 2 == m || j + 1 == m) {
            continue;
        }
        classes.push(interval_class(
            j + 1,
            ClassKind::Block { j },
            j * s + 1,
            (j + 1) * s,
            1,
            n,
        )?);
    }
    DifferenceConstruction::assemble(k, s, classes)
}

/// Adds vertex `n` copying vertex `n-1`: `{x, n}` gets the color of
/// `{x, n-1}` and `{n-1, n}` gets `new_edge_color`.
pub fn replicate_vertex(coloring: &EdgeColoring, new_edge_color: usize) -> Result<EdgeColoring> {
    if new_edge_color >= coloring.k() {
        return Err(Error::InvalidParameter(format!(
            "color {new_edge_color} outside 0..{}",
            coloring.k()
        )));
    }
    let n = coloring.n();
    EdgeColoring::from_fn(n + 1, coloring.k(), |u, v| {
        if v < n {
            coloring.color(u, v)
        } else if u == n - 1 {
            new_edge_color
        } else {
            coloring.color(u, n - 1)
        }
    })
}

/// The largest monochromatic star at a chosen center.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarBaseline {
    pub color: usize,
    pub center: usize,
    pub vertices: Vec<usize>,
}

/// Center plus its neighbors in the majority color at `center` (ties go
/// to the smallest color id). Any two members meet through the center.
pub fn star_baseline(coloring: &EdgeColoring, center: usize) -> Result<StarBaseline> {
    let n = coloring.n();
    if center >= n {
        return Err(Error::VertexOutOfRange { vertex: center, n });
    }
    let mut counts = vec![0usize; coloring.k()];
    for v in (0..n).filter(|&v| v != center) {
        counts[coloring.color(center, v)] += 1;
    }
    let color = (0..coloring.k())
        .max_by_key(|&c| (counts[c], std::cmp::Reverse(c)))
        .expect("k >= 1");
    let vertices = (0..n)
        .filter(|&v| v == center || coloring.color(center, v) == color)
        .collect();
    Ok(StarBaseline {
        color,
        center,
        vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Graph64;

    fn set(n: usize, xs: &[i64]) -> CyclicSet {
        CyclicSet::from_values(n, xs.iter().copied()).unwrap()
    }

    fn diffs(c: &DifferenceConstruction) -> Vec<Vec<usize>> {
        c.classes.iter().map(|cl| cl.diffs.to_vec()).collect()
    }

    #[test]
    fn partition_examples() {
        let sets: Vec<_> = (1..=4).map(|d| set(9, &[d])).collect();
        let col = from_difference_partition(9, &sets).unwrap();
        let class2: Graph64 = col.class_graph(2).unwrap();
        let c93: Graph64 = CircleGraph::new(set(9, &[3])).unwrap().to_graph().unwrap();
        assert_eq!(class2, c93);
        assert!(from_difference_partition(7, &[set(7, &[1, 2]), set(7, &[3])]).is_ok());
        match from_difference_partition(7, &[set(7, &[1]), set(7, &[3])]) {
            Err(Error::PartitionInvalid { uncovered, .. }) => assert_eq!(uncovered, vec![2]),
            other => panic!("expected partition error, got {other:?}"),
        }
        match from_difference_partition(7, &[set(7, &[1, 2]), set(7, &[2, 3])]) {
            Err(Error::PartitionInvalid { overlapping, .. }) => assert_eq!(overlapping, vec![2]),
            other => panic!("expected partition error, got {other:?}"),
        }
    }

    #[test]
    fn two_color_blocks() {
        let ext = two_color_extremal(8).unwrap();
        assert_eq!(ext.r1, vec![0, 1]);
        assert_eq!(ext.b1, vec![2, 3]);
        assert_eq!(ext.b2, vec![4, 5]);
        assert_eq!(ext.r2, vec![6, 7]);
        let five = two_color_extremal(5).unwrap();
        let sizes: Vec<_> = [&five.r1, &five.b1, &five.b2, &five.r2]
            .iter()
            .map(|b| b.len())
            .collect();
        assert_eq!(sizes, vec![2, 1, 1, 1]);
        assert!(two_color_extremal(3).is_err());
    }

    #[test]
    fn two_color_long_paths_between_opposite_blocks() {
        for n in 4..=20 {
            let ext = two_color_extremal(n).unwrap();
            let red: Graph64 = ext.coloring.class_graph(RED).unwrap();
            let blue: Graph64 = ext.coloring.class_graph(BLUE).unwrap();
            for &x in &ext.r1 {
                let d = red.bfs_distances(x);
                assert!(ext.r2.iter().all(|&y| d[y].is_none_or(|d| d >= 3)));
            }
            for &x in &ext.b1 {
                let d = blue.bfs_distances(x);
                assert!(ext.b2.iter().all(|&y| d[y].is_none_or(|d| d >= 3)));
            }
        }
    }

    #[test]
    fn three_color_sets() {
        let c = three_color_construction(3).unwrap();
        assert_eq!(c.n(), 19);
        assert_eq!(diffs(&c), vec![vec![1, 2, 3], vec![4, 5, 9], vec![6, 7, 8]]);
        assert_eq!(c.classes[1].generator, "[4,5] u [9,9]");
        let c9 = three_color_construction(9).unwrap();
        assert_eq!(c9.n(), 55);
        assert_eq!(c9.classes[0].diffs, CyclicSet::range(55, 1, 9, 1).unwrap());
        let split = CyclicSet::range(55, 10, 15, 1)
            .unwrap()
            .union(&CyclicSet::range(55, 25, 27, 1).unwrap())
            .unwrap();
        assert_eq!(c9.classes[1].diffs, split);
        assert_eq!(
            c9.classes[2].diffs,
            CyclicSet::range(55, 16, 24, 1).unwrap()
        );
        assert!(three_color_construction(4).is_err());
        assert!(three_color_construction(0).is_err());
    }

    #[test]
    fn k_color_examples() {
        let c = k_color_construction(4, 1).unwrap();
        assert_eq!(c.n(), 9);
        assert_eq!(diffs(&c), vec![vec![1], vec![2], vec![3], vec![4]]);
        let c = k_color_construction(6, 1).unwrap();
        assert_eq!(c.n(), 13);
        assert_eq!(
            diffs(&c),
            vec![vec![1], vec![2], vec![4], vec![3], vec![5], vec![6]]
        );
        assert_eq!(c.classes[2].kind, ClassKind::ParityUpper);
        assert_eq!(c.classes[2].generator, "[4,4]_2");
        let c = k_color_construction(5, 2).unwrap();
        assert_eq!(c.n(), 21);
        assert_eq!(
            diffs(&c),
            vec![vec![1, 3], vec![2, 4], vec![5, 6], vec![7, 8], vec![9, 10]]
        );
        assert!(k_color_construction(3, 1).is_err());
        assert!(k_color_construction(4, 0).is_err());
    }

    #[test]
    fn k_color_partitions_exhaustively() {
        for k in 4..=9 {
            for s in 1..=4 {
                let c = k_color_construction(k, s).unwrap();
                let n = 2 * s * k + 1;
                let mut seen = vec![0; k * s + 1];
                for cl in &c.classes {
                    for d in cl.diffs.iter() {
                        seen[d] += 1;
                    }
                }
                assert!(seen[1..].iter().all(|&x| x == 1), "k={k} s={s}");
                // round trip: the difference sets rebuild the same coloring
                let sets: Vec<_> = c.classes.iter().map(|cl| cl.diffs.clone()).collect();
                assert_eq!(from_difference_partition(n, &sets).unwrap(), c.coloring);
                for cl in &c.classes {
                    let g: Graph<u128> = c.coloring.class_graph(cl.label - 1).unwrap();
                    if n <= 128 {
                        assert_eq!(g, cl.circle().to_graph().unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn replication_copies_last_vertex() {
        let red_k3 = EdgeColoring::uniform(3, 2, RED).unwrap();
        assert_eq!(
            replicate_vertex(&red_k3, RED).unwrap(),
            EdgeColoring::uniform(4, 2, RED).unwrap()
        );
        let base = k_color_construction(4, 1).unwrap().coloring;
        let rep = replicate_vertex(&base, 3).unwrap();
        assert_eq!(rep.n(), 10);
        assert_eq!(rep.color(8, 9), 3);
        for x in 0..8 {
            assert_eq!(rep.color(x, 9), rep.color(x, 8));
        }
        assert!(replicate_vertex(&base, 4).is_err());
    }

    #[test]
    fn star_examples() {
        let red = EdgeColoring::uniform(5, 2, RED).unwrap();
        assert_eq!(star_baseline(&red, 0).unwrap().vertices.len(), 5);
        let ext = two_color_extremal(8).unwrap();
        let star = star_baseline(&ext.coloring, 0).unwrap();
        assert!(star.vertices.len() >= 4);
        for &v in &star.vertices[1..] {
            assert_eq!(ext.coloring.color(0, v), star.color);
        }
        assert!(star_baseline(&ext.coloring, 8).is_err());
    }

    #[test]
    fn rows_round_trip() {
        let c = k_color_construction(4, 1).unwrap().coloring;
        assert_eq!(EdgeColoring::from_rows(9, 4, &c.rows()).unwrap(), c);
        assert!(EdgeColoring::from_rows(3, 2, &[vec![0], vec![0]]).is_err());
    }
}
