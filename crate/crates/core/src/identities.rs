//! Closed-form neighbourhood identities used by the bound arguments,
//! recomputed from the circle graphs and compared with the quoted
//! interval expressions.

use serde::Serialize;

use crate::coloring::{k_color_construction, three_color_construction, ClassKind};
use crate::cyclic::{CyclicSet, ResidueInterval};
use crate::error::{Error, Result};

/// How the claimed set relates to the computed one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// Exact set equality.
    Equals,
    /// Every claimed element lies outside the computed set.
    Outside,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub k: usize,
    pub s: usize,
    pub n: usize,
    /// Color class `C_i` the statement is about, if any.
    pub class: Option<usize>,
    /// What is being computed, e.g. `N0c(C_2,2)` or `L+M`.
    pub statement: String,
    pub relation: Relation,
    /// The quoted expression in terms of `s`, `t`, `k`, `j`.
    pub expression: String,
    pub claimed: String,
    pub computed: String,
    pub matches: bool,
}

struct Builder {
    k: usize,
    s: usize,
    n: usize,
    out: Vec<IdentityCheck>,
}

impl Builder {
    fn iv(&self, a: i64, b: i64, p: i64) -> CyclicSet {
        CyclicSet::range(self.n, a, b, p).expect("positive step")
    }

    fn union(&self, parts: &[CyclicSet]) -> CyclicSet {
        parts.iter().fold(
            CyclicSet::empty(self.n).expect("valid modulus"),
            |acc, p| acc.union(p).expect("same modulus"),
        )
    }

    fn points(&self, xs: &[i64]) -> CyclicSet {
        CyclicSet::from_values(self.n, xs.iter().copied()).expect("valid modulus")
    }

    fn equals(
        &mut self,
        class: Option<usize>,
        statement: &str,
        expression: &str,
        claimed: CyclicSet,
        computed: &CyclicSet,
    ) {
        self.out.push(IdentityCheck {
            k: self.k,
            s: self.s,
            n: self.n,
            class,
            statement: statement.to_string(),
            relation: Relation::Equals,
            expression: expression.to_string(),
            claimed: claimed.interval_notation(),
            computed: computed.interval_notation(),
            matches: &claimed == computed,
        });
    }

    fn outside(&mut self, class: usize, expression: &str, claimed: CyclicSet, ball: &CyclicSet) {
        let hit = claimed.intersection(ball).expect("same modulus");
        self.out.push(IdentityCheck {
            k: self.k,
            s: self.s,
            n: self.n,
            class: Some(class),
            statement: format!("outside N0(C_{class},2)"),
            relation: Relation::Outside,
            expression: expression.to_string(),
            claimed: claimed.interval_notation(),
            computed: hit.interval_notation(),
            matches: hit.is_empty(),
        });
    }
}

/// Identities for the three-color construction on `6s+1` vertices.
pub fn three_color_identities(s: usize) -> Result<Vec<IdentityCheck>> {
    let con = three_color_construction(s)?;
    let n = con.n();
    let mut b = Builder {
        k: 3,
        s,
        n,
        out: Vec::new(),
    };
    let (si, t) = (s as i64, (s / 3) as i64);
    let [c1, c2, c3] = [0, 1, 2].map(|i| con.classes[i].circle());

    let claim = b.iv(2 * si + 1, 4 * si, 1);
    b.equals(
        Some(1),
        "N0c(C_1,2)",
        "[2s+1,4s]",
        claim,
        &c1.second_nbhd_complement(),
    );

    let l = b.iv(3 * t + 1, 5 * t, 1);
    let m = b.iv(8 * t + 1, 10 * t, 1);
    let lb = b.iv(13 * t + 1, 15 * t, 1);
    let zero = b.points(&[0]);
    let claim = b.union(&[zero, l.clone(), m.clone(), lb.clone()]);
    b.equals(
        Some(2),
        "N0(C_2,1)",
        "{0} u L u M u Lbar",
        claim,
        &c2.closed_nbhd1(0)?,
    );
    let wrap = |a: i64, z: i64| -> Result<CyclicSet> {
        Ok(ResidueInterval::unit(a as usize, z as usize, n)?.materialize())
    };
    let sums: [(&str, &CyclicSet, &CyclicSet, &str, CyclicSet); 6] = [
        ("L+L", &l, &l, "[6t+2,10t]", b.iv(6 * t + 2, 10 * t, 1)),
        ("L+M", &l, &m, "[11t+2,15t]", b.iv(11 * t + 2, 15 * t, 1)),
        (
            "L+Lbar",
            &l,
            &lb,
            "[16t+2,18t] u [0,2t-1]",
            b.iv(16 * t + 2, 18 * t, 1).union(&b.iv(0, 2 * t - 1, 1))?,
        ),
        ("M+M", &m, &m, "[16t+2,2t-1]", wrap(16 * t + 2, 2 * t - 1)?),
        (
            "M+Lbar",
            &m,
            &lb,
            "[3t+1,7t-1]",
            b.iv(3 * t + 1, 7 * t - 1, 1),
        ),
        (
            "Lbar+Lbar",
            &lb,
            &lb,
            "[8t+1,12t-1]",
            b.iv(8 * t + 1, 12 * t - 1, 1),
        ),
    ];
    let sums: Vec<_> = sums
        .into_iter()
        .map(|(name, x, y, expr, claim)| Ok((name, x.sum_set(y)?, expr, claim)))
        .collect::<Result<_>>()?;
    for (name, computed, expr, claim) in sums {
        b.equals(Some(2), name, expr, claim, &computed);
    }
    let claim = b
        .iv(2 * t, 3 * t, 1)
        .union(&b.iv(15 * t + 1, 16 * t + 1, 1))?;
    b.equals(
        Some(2),
        "N0c(C_2,2)",
        "[2t,3t] u [15t+1,16t+1]",
        claim,
        &c2.second_nbhd_complement(),
    );

    let ball3 = c3.ball2_at_zero();
    let claim = b.iv(8 * t + 1, 10 * t, 1);
    b.equals(
        Some(3),
        "N0c(C_3,2)",
        "[8t+1,10t]",
        claim,
        &ball3.complement(),
    );
    let claim = b.union(&[
        b.points(&[0]),
        b.iv(5 * t + 1, 8 * t, 1),
        b.iv(13 * t + 1, 18 * t, 1),
        b.iv(10 * t + 1, 13 * t, 1),
        b.iv(1, 5 * t, 1),
    ]);
    b.equals(
        Some(3),
        "N0(C_3,2)",
        "{0} u [5t+1,8t] u [13t+1,18t] u [10t+1,13t] u [1,5t]",
        claim,
        &ball3,
    );
    Ok(b.out)
}

/// Identities for the `k`-color construction on `2sk+1` vertices: the
/// quoted form of `N0(C_i,2)` for every class that has one, and the
/// residues claimed to lie outside it.
pub fn k_color_identities(k: usize, s: usize) -> Result<Vec<IdentityCheck>> {
    let con = k_color_construction(k, s)?;
    let n = con.n();
    let mut b = Builder {
        k,
        s,
        n,
        out: Vec::new(),
    };
    let (ki, si) = (k as i64, s as i64);
    for class in &con.classes {
        let ball = class.circle().ball2_at_zero();
        let label = class.label;
        let stmt = format!("N0(C_{label},2)");
        let (expr, claim, out_expr, out_pts): (&str, CyclicSet, &str, Vec<i64>) = match class.kind {
            ClassKind::OddLow => (
                "[(2k-4)s+3,2ks-1]_2 u [0,4s-2]_2 u [1,2s-1]_2 u [(2k-2)s+2,2ks]_2",
                b.union(&[
                    b.iv((2 * ki - 4) * si + 3, 2 * ki * si - 1, 2),
                    b.iv(0, 4 * si - 2, 2),
                    b.iv(1, 2 * si - 1, 2),
                    b.iv((2 * ki - 2) * si + 2, 2 * ki * si, 2),
                ]),
                "{2s+1, (2k-4)s-1, (2k-2)s}",
                vec![2 * si + 1, (2 * ki - 4) * si - 1, (2 * ki - 2) * si],
            ),
            ClassKind::EvenLow => (
                "[(2k-4)s+1,2ks-1]_2 u [0,4s]_2",
                b.iv((2 * ki - 4) * si + 1, 2 * ki * si - 1, 2)
                    .union(&b.iv(0, 4 * si, 2))?,
                "{(2k-4)s-1}",
                vec![(2 * ki - 4) * si - 1],
            ),
            ClassKind::Block { j } if j + 1 == k => (
                "[(2k-2)s+2,2ks] u [0,2s-1] u [(k-1)s+1,(k+1)s]",
                b.union(&[
                    b.iv((2 * ki - 2) * si + 2, 2 * ki * si, 1),
                    b.iv(0, 2 * si - 1, 1),
                    b.iv((ki - 1) * si + 1, (ki + 1) * si, 1),
                ]),
                "{(k-1)s, 2(k-1)s}",
                vec![(ki - 1) * si, 2 * (ki - 1) * si],
            ),
            ClassKind::Block { j } if 3 * j == 2 * k - 2 => {
                let j = j as i64;
                (
                    "[(3j+1)s+2,(3j+2)s] u [0,s-1] u [js+1,(j+2)s-1] u [2js+2,(2j+2)s]",
                    b.union(&[
                        b.iv((3 * j + 1) * si + 2, (3 * j + 2) * si, 1),
                        b.iv(0, si - 1, 1),
                        b.iv(j * si + 1, (j + 2) * si - 1, 1),
                        b.iv(2 * j * si + 2, (2 * j + 2) * si, 1),
                    ]),
                    "{js, 2js}",
                    vec![j * si, 2 * j * si],
                )
            }
            ClassKind::Block { j } if 3 * j == 2 * k - 1 => {
                let j = j as i64;
                (
                    "[3js+2,(3j+1)s] u [0,s-1] u [(j-1)s+1,(j+1)s] u [2js+1,(2j+2)s]",
                    b.union(&[
                        b.iv(3 * j * si + 2, (3 * j + 1) * si, 1),
                        b.iv(0, si - 1, 1),
                        b.iv((j - 1) * si + 1, (j + 1) * si, 1),
                        b.iv(2 * j * si + 1, (2 * j + 2) * si, 1),
                    ]),
                    "{(j-1)s-1, (j+1)s+1, 2js}",
                    vec![(j - 1) * si - 1, (j + 1) * si + 1, 2 * j * si],
                )
            }
            ClassKind::Block { j } if 3 * j == 2 * k => {
                let j = j as i64;
                (
                    "[(3j-1)s+2,3js] u [0,s-1] u [(j-2)s+1,js-1] u [js+1,(j+1)s] u [(2j-1)s+1,2js] u [2js+2,(2j+2)s]",
                    b.union(&[
                        b.iv((3 * j - 1) * si + 2, 3 * j * si, 1),
                        b.iv(0, si - 1, 1),
                        b.iv((j - 2) * si + 1, j * si - 1, 1),
                        b.iv(j * si + 1, (j + 1) * si, 1),
                        b.iv((2 * j - 1) * si + 1, 2 * j * si, 1),
                        b.iv(2 * j * si + 2, (2 * j + 2) * si, 1),
                    ]),
                    "{2s, (j-2)s, js, (j+2)s+1, 2js+1}",
                    vec![2 * si, (j - 2) * si, j * si, (j + 2) * si + 1, 2 * j * si + 1],
                )
            }
            ClassKind::Block { j } => {
                let j = j as i64;
                let claim = b.union(&[
                    b.points(&[0]),
                    b.iv(1, si - 1, 1),
                    b.iv(j * si + 1, (j + 1) * si, 1),
                    b.iv(2 * j * si + 2, (2 * j + 2) * si, 1),
                    b.iv((2 * ki - 2 * j - 2) * si + 1, (2 * ki - 2 * j) * si - 1, 1),
                    b.iv((2 * ki - j - 1) * si + 1, (2 * ki - j) * si, 1),
                    b.iv((2 * ki - 1) * si + 2, 2 * ki * si, 1),
                ]);
                let flank = b.iv((j - 1) * si + 1, j * si, 1).union(&b.iv(
                    (j + 1) * si + 1,
                    (j + 2) * si,
                    1,
                ))?;
                b.equals(
                    Some(label),
                    &stmt,
                    "{0} u [1,s-1] u [js+1,(j+1)s] u [2js+2,(2j+2)s] u [(2k-2j-2)s+1,(2k-2j)s-1] u [(2k-j-1)s+1,(2k-j)s] u [(2k-1)s+2,2ks]",
                    claim,
                    &ball,
                );
                b.outside(label, "[(j-1)s+1,js] u [(j+1)s+1,(j+2)s]", flank, &ball);
                continue;
            }
            ClassKind::ParityUpper | ClassKind::ParityLower => {
                let j = (2 * k / 3) as i64;
                let upper = class.kind == ClassKind::ParityUpper;
                let claim = if upper {
                    b.union(&[
                        b.iv((3 * j - 2) * si + 3, 2 * si * ki - 1, 2),
                        b.iv(0, 2 * si - 2, 2),
                        b.iv((j - 2) * si + 2, j * si, 2),
                        b.iv(j * si + 1, j * si + 4 * si - 3, 2),
                        b.iv((2 * j - 4) * si + 4, 2 * j * si, 2),
                        b.iv(2 * j * si + 1, (2 * j + 2) * si - 1, 2),
                    ])
                } else {
                    b.union(&[
                        b.iv((3 * j - 2) * si + 3, 2 * si * ki - 1, 2),
                        b.iv(0, 2 * si - 2, 2),
                        b.iv((j - 2) * si + 1, j * si - 1, 2),
                        b.iv(j * si + 3, (j + 4) * si - 1, 2),
                        b.iv((2 * j - 4) * si + 2, 2 * j * si - 2, 2),
                        b.iv(2 * j * si + 2, (2 * j + 2) * si, 2),
                    ])
                };
                if upper {
                    (
                        "[(3j-2)s+3,2sk-1]_2 u [0,2s-2]_2 u [(j-2)s+2,js]_2 u [js+1,js+4s-3]_2 u [(2j-4)s+4,2js]_2 u [2js+1,(2j+2)s-1]_2",
                        claim,
                        "{2s-1, (j-4)s+3, (j-2)s, js-1, (2j-4)s+2}",
                        vec![2 * si - 1, (j - 4) * si + 3, (j - 2) * si, j * si - 1, (2 * j - 4) * si + 2],
                    )
                } else {
                    (
                        "[(3j-2)s+3,2sk-1]_2 u [0,2s-2]_2 u [(j-2)s+1,js-1]_2 u [js+3,(j+4)s-1]_2 u [(2j-4)s+2,2js-2]_2 u [2js+2,(2j+2)s]_2",
                        claim,
                        "{2s+2, (j-4)s-1, (j-2)s-1, js+1, (2j-4)s}",
                        vec![2 * si + 2, (j - 4) * si - 1, (j - 2) * si - 1, j * si + 1, (2 * j - 4) * si],
                    )
                }
            }
            ClassKind::ThreeLow | ClassKind::ThreeSplit | ClassKind::ThreeMiddle => {
                return Err(Error::Invariant(
                    "three-color class in a k-color construction".into(),
                ))
            }
        };
        b.equals(Some(label), &stmt, expr, claim, &ball);
        let pts = b.points(&out_pts);
        b.outside(label, out_expr, pts, &ball);
    }
    Ok(b.out)
}

/// Dispatches on `k`: 3 selects the three-color construction.
pub fn identities(k: usize, s: usize) -> Result<Vec<IdentityCheck>> {
    if k == 3 {
        three_color_identities(s)
    } else {
        k_color_identities(k, s)
    }
}
