//! Extracting a monochromatic diameter-two subgraph on at least
//! `ceil(3n/4)` vertices from any red/blue coloring of `K_n`.
//!
//! If neither color class spans with diameter two, a red violated pair
//! `r1, r2` and a blue violated pair `b1, b2` are labelled so that
//! `{r1,b1}, {r2,b2}` are red and `{r1,b2}, {r2,b1}` are blue. Four
//! families of vertex sets are then peeled:
//!
//! * `R_{d,i}`: red-violated vertices of `K_n - (R_{d,1} u .. u R_{d,i-1})`
//!   whose edge to `b_d` is red;
//! * `B_{d,i}`: blue-violated vertices of `K_n - (B_{d,1} u .. u B_{d,i-1})`
//!   whose edge to `r_d` is red.
//!
//! All sets are pairwise disjoint, so one family has union at most
//! `floor(n/4)`; deleting it leaves a diameter-two class in that family's
//! color.

use serde::Serialize;

use crate::bits::VertexBits;
use crate::coloring::{EdgeColoring, BLUE, RED};
use crate::dispatch_bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solve::is_diam2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ViolatedPair {
    pub color: usize,
    pub u: usize,
    pub v: usize,
}

/// Vertices of `active` that some other active vertex cannot reach by a
/// path of at most two edges inside `active`.
pub fn violated_vertices<W: VertexBits>(g: &Graph<W>, active: W) -> W {
    active
        .ones()
        .filter(|&u| !(active & !g.ball2_within(u, active)).is_zero())
        .fold(W::zero(), |acc, u| acc.with(u))
}

/// Lexicographically least violated pair of `g` restricted to `active`.
pub fn violated_pair_in<W: VertexBits>(g: &Graph<W>, active: W) -> Option<(usize, usize)> {
    active.ones().find_map(|u| {
        (active & !g.ball2_within(u, active))
            .first()
            .map(|v| (u, v))
    })
}

/// Lexicographically least violated pair of color `color` among `active`.
pub fn find_violated_pair(
    coloring: &EdgeColoring,
    color: usize,
    active: &[usize],
) -> Result<Option<ViolatedPair>> {
    dispatch_bits!(coloring.n(), W => {
        let g: Graph<W> = coloring.class_graph(color)?;
        if let Some(&bad) = active.iter().find(|&&v| v >= coloring.n()) {
            return Err(Error::VertexOutOfRange { vertex: bad, n: coloring.n() });
        }
        let set = W::from_vertices(active.iter().copied());
        Ok(violated_pair_in(&g, set).map(|(u, v)| ViolatedPair { color, u, v }))
    })
}

/// Vertices that are both red-violated and blue-violated in `K_n`.
/// Always empty for a 2-coloring; exposed as an executable check.
pub fn doubly_violated(coloring: &EdgeColoring) -> Result<Vec<usize>> {
    dispatch_bits!(coloring.n(), W => {
        let red: Graph<W> = coloring.class_graph(RED)?;
        let blue: Graph<W> = coloring.class_graph(BLUE)?;
        let all = red.all();
        Ok((violated_vertices(&red, all) & violated_vertices(&blue, all)).to_vec())
    })
}

/// Seed vertices: `{r1,b1}`, `{r2,b2}` red, `{r1,b2}`, `{r2,b1}` blue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Quadruple {
    pub r1: usize,
    pub r2: usize,
    pub b1: usize,
    pub b2: usize,
}

fn require_two_colors(coloring: &EdgeColoring) -> Result<()> {
    if coloring.k() == 2 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "expected a 2-coloring, got k = {}",
            coloring.k()
        )))
    }
}

fn seed_in<W: VertexBits>(
    coloring: &EdgeColoring,
    red: &Graph<W>,
    blue: &Graph<W>,
) -> Result<Quadruple> {
    let all = red.all();
    let (r1, r2) = violated_pair_in(red, all)
        .ok_or_else(|| Error::InvalidParameter("no red violated pair: red class spans".into()))?;
    let (b1, b2) = violated_pair_in(blue, all)
        .ok_or_else(|| Error::InvalidParameter("no blue violated pair: blue class spans".into()))?;
    let distinct = r1 != b1 && r1 != b2 && r2 != b1 && r2 != b2;
    if !distinct {
        return Err(Error::Invariant(format!(
            "red pair ({r1},{r2}) meets blue pair ({b1},{b2})"
        )));
    }
    let (r1, r2) = if coloring.color(r1, b1) == RED {
        (r1, r2)
    } else {
        (r2, r1)
    };
    let q = Quadruple { r1, r2, b1, b2 };
    let pattern = coloring.color(r1, b1) == RED
        && coloring.color(r2, b2) == RED
        && coloring.color(r1, b2) == BLUE
        && coloring.color(r2, b1) == BLUE;
    if pattern {
        Ok(q)
    } else {
        Err(Error::Invariant(format!(
            "seed {q:?} lacks the required edge colors"
        )))
    }
}

/// Finds and labels the seed quadruple. Fails with `InvalidParameter` when
/// one color class already spans with diameter two.
pub fn seed_violated_quadruple(coloring: &EdgeColoring) -> Result<Quadruple> {
    require_two_colors(coloring)?;
    dispatch_bits!(coloring.n(), W => {
        let red: Graph<W> = coloring.class_graph(RED)?;
        let blue: Graph<W> = coloring.class_graph(BLUE)?;
        seed_in(coloring, &red, &blue)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FamilyId {
    R1,
    R2,
    B1,
    B2,
}

impl FamilyId {
    pub const ALL: [FamilyId; 4] = [FamilyId::R1, FamilyId::R2, FamilyId::B1, FamilyId::B2];

    /// Color of the class left behind when this family is removed.
    pub fn color(self) -> usize {
        match self {
            FamilyId::R1 | FamilyId::R2 => RED,
            FamilyId::B1 | FamilyId::B2 => BLUE,
        }
    }
}

/// The four peeled families, each a sequence of nonempty vertex sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelFamilies {
    pub r1: Vec<Vec<usize>>,
    pub r2: Vec<Vec<usize>>,
    pub b1: Vec<Vec<usize>>,
    pub b2: Vec<Vec<usize>>,
}

impl PeelFamilies {
    pub fn family(&self, id: FamilyId) -> &[Vec<usize>] {
        match id {
            FamilyId::R1 => &self.r1,
            FamilyId::R2 => &self.r2,
            FamilyId::B1 => &self.b1,
            FamilyId::B2 => &self.b2,
        }
    }

    /// Sorted union of a family's sets.
    pub fn union(&self, id: FamilyId) -> Vec<usize> {
        let mut all: Vec<usize> = self.family(id).iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    /// The family with the smallest union; ties resolved in the order
    /// `R1, R2, B1, B2`.
    pub fn smallest(&self) -> FamilyId {
        FamilyId::ALL
            .into_iter()
            .min_by_key(|&id| self.union(id).len())
            .expect("four families")
    }
}

fn peel<W: VertexBits>(coloring: &EdgeColoring, g: &Graph<W>, anchor: usize) -> Vec<W> {
    let attached = (0..g.n())
        .filter(|&x| x != anchor && coloring.color(x, anchor) == RED)
        .fold(W::zero(), |acc, x| acc.with(x));
    let mut removed = W::zero();
    let mut sets = Vec::new();
    loop {
        let active = g.all() & !removed;
        let next = violated_vertices(g, active) & attached;
        if next.is_zero() {
            return sets;
        }
        removed = removed | next;
        sets.push(next);
    }
}

fn families_in<W: VertexBits>(
    coloring: &EdgeColoring,
    red: &Graph<W>,
    blue: &Graph<W>,
    q: &Quadruple,
) -> Result<[Vec<W>; 4]> {
    let fams = [
        peel(coloring, red, q.b1),
        peel(coloring, red, q.b2),
        peel(coloring, blue, q.r1),
        peel(coloring, blue, q.r2),
    ];
    let mut seen = W::zero();
    for set in fams.iter().flatten() {
        if !(seen & *set).is_zero() {
            return Err(Error::Invariant(format!(
                "peeled sets overlap in {:?}",
                (seen & *set).to_vec()
            )));
        }
        seen = seen | *set;
    }
    let first = |f: &Vec<W>, v: usize| f.first().is_some_and(|s| s.has(v));
    if !(first(&fams[0], q.r1)
        && first(&fams[1], q.r2)
        && first(&fams[2], q.b1)
        && first(&fams[3], q.b2))
    {
        return Err(Error::Invariant(format!(
            "seed vertices of {q:?} missing from their first peeled sets"
        )));
    }
    Ok(fams)
}

/// Peels the four families for a labelled seed quadruple.
pub fn build_peel_families(coloring: &EdgeColoring, q: &Quadruple) -> Result<PeelFamilies> {
    require_two_colors(coloring)?;
    dispatch_bits!(coloring.n(), W => {
        let red: Graph<W> = coloring.class_graph(RED)?;
        let blue: Graph<W> = coloring.class_graph(BLUE)?;
        let [r1, r2, b1, b2] = families_in(coloring, &red, &blue, q)?;
        let lists = |f: Vec<W>| f.into_iter().map(|s| s.to_vec()).collect();
        Ok(PeelFamilies { r1: lists(r1), r2: lists(r2), b1: lists(b1), b2: lists(b2) })
    })
}

/// Result of the extraction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtractionOutput {
    pub color: usize,
    pub vertices: Vec<usize>,
    /// `None` when a color class already spans with diameter two.
    pub seed: Option<Quadruple>,
    pub families: Option<PeelFamilies>,
    pub removed: Option<FamilyId>,
}

/// `ceil(3n/4)`.
pub fn three_quarters(n: usize) -> usize {
    (3 * n).div_ceil(4)
}

/// Vertices left after deleting a family, together with their color.
pub fn remove_family(n: usize, families: &PeelFamilies, id: FamilyId) -> (usize, Vec<usize>) {
    let gone = families.union(id);
    let rest = (0..n).filter(|v| gone.binary_search(v).is_err()).collect();
    (id.color(), rest)
}

/// A monochromatic diameter-two vertex set of size at least `ceil(3n/4)`.
/// Both postconditions are checked; a failure is reported as an invariant
/// error.
pub fn three_quarter_subgraph(coloring: &EdgeColoring) -> Result<ExtractionOutput> {
    require_two_colors(coloring)?;
    let n = coloring.n();
    dispatch_bits!(n, W => {
        let red: Graph<W> = coloring.class_graph(RED)?;
        let blue: Graph<W> = coloring.class_graph(BLUE)?;
        let all = red.all();
        let spanning = [(RED, &red), (BLUE, &blue)]
            .into_iter()
            .find(|(_, g)| violated_pair_in(g, all).is_none());
        let out = if let Some((color, _)) = spanning {
            ExtractionOutput { color, vertices: all.to_vec(), seed: None, families: None, removed: None }
        } else {
            let q = seed_in(coloring, &red, &blue)?;
            let [r1, r2, b1, b2] = families_in(coloring, &red, &blue, &q)?;
            let lists = |f: Vec<W>| f.into_iter().map(|s| s.to_vec()).collect();
            let families = PeelFamilies { r1: lists(r1), r2: lists(r2), b1: lists(b1), b2: lists(b2) };
            let id = families.smallest();
            let (color, vertices) = remove_family(n, &families, id);
            ExtractionOutput { color, vertices, seed: Some(q), families: Some(families), removed: Some(id) }
        };
        let g = if out.color == RED { &red } else { &blue };
        let set = W::from_vertices(out.vertices.iter().copied());
        if !is_diam2(g, set) {
            return Err(Error::Invariant(format!(
                "extracted set {:?} does not have diameter two in color {}",
                out.vertices, out.color
            )));
        }
        if out.vertices.len() < three_quarters(n) {
            return Err(Error::Invariant(format!(
                "extracted {} vertices, below ceil(3n/4) = {}",
                out.vertices.len(),
                three_quarters(n)
            )));
        }
        Ok(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::two_color_extremal;

    #[test]
    fn monochromatic_complete_graph() {
        let red = EdgeColoring::uniform(5, 2, RED).unwrap();
        assert_eq!(
            find_violated_pair(&red, RED, &[0, 1, 2, 3, 4]).unwrap(),
            None
        );
        let out = three_quarter_subgraph(&red).unwrap();
        assert_eq!((out.color, out.vertices.len()), (RED, 5));
        assert!(seed_violated_quadruple(&red).is_err());
    }

    #[test]
    fn path_coloring_pair() {
        // K4 with red edges 0-1 and 2-3 only
        let col = EdgeColoring::from_fn(4, 2, |u, v| {
            if (u, v) == (0, 1) || (u, v) == (2, 3) {
                RED
            } else {
                BLUE
            }
        })
        .unwrap();
        let p = find_violated_pair(&col, RED, &[0, 1, 2, 3])
            .unwrap()
            .unwrap();
        assert_eq!((p.u, p.v), (0, 2));
    }

    #[test]
    fn extremal_eight() {
        let ext = two_color_extremal(8).unwrap();
        let p = find_violated_pair(&ext.coloring, RED, &(0..8).collect::<Vec<_>>())
            .unwrap()
            .unwrap();
        assert!(ext.r1.contains(&p.u) && ext.r2.contains(&p.v));
        let q = seed_violated_quadruple(&ext.coloring).unwrap();
        let mut blocks = [q.r1, q.r2, q.b1, q.b2].map(|v| v / 2);
        blocks.sort();
        assert_eq!(blocks, [0, 1, 2, 3]);
        let fams = build_peel_families(&ext.coloring, &q).unwrap();
        assert!(FamilyId::ALL.iter().any(|&id| fams.union(id).len() <= 2));
        let out = three_quarter_subgraph(&ext.coloring).unwrap();
        assert_eq!(out.vertices.len(), 6);
        assert!(doubly_violated(&ext.coloring).unwrap().is_empty());
    }

    #[test]
    fn three_quarters_rounds_up() {
        assert_eq!(three_quarters(8), 6);
        assert_eq!(three_quarters(5), 4);
        assert_eq!(three_quarters(20), 15);
    }

    #[test]
    fn rejects_non_two_colorings() {
        let c = EdgeColoring::uniform(4, 3, 0).unwrap();
        assert!(three_quarter_subgraph(&c).is_err());
    }
}
