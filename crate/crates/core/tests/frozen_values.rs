//! Optima cross-checked against an independent integer-programming model
//! (GLPK) of the diameter-two condition, and brute force where it reaches.

use rd2_core::coloring::{k_color_construction, three_color_construction};
use rd2_core::solve::{max_diam2_bruteforce, max_diam2_exact, min_vertex_cover_exact};
use rd2_core::{Budget, CircleGraph, CyclicSet, Diam2Options, Graph128, Graph64};

fn rooted() -> Diam2Options {
    Diam2Options::default()
        .with_budget(Budget::nodes(100_000_000))
        .rooted(0)
}

#[test]
fn three_color_optima() {
    for (s, want) in [(3, [7, 7, 8]), (6, [13, 13, 14]), (9, [19, 19, 20])] {
        let con = three_color_construction(s).unwrap();
        for (class, &w) in con.classes.iter().zip(&want) {
            let g: Graph64 = class.circle().to_graph().unwrap();
            let r = max_diam2_exact(&g, &rooted()).unwrap();
            assert!(r.proven_optimal);
            assert_eq!(r.optimum, w, "s={s} C_{}", class.label);
        }
    }
}

#[test]
fn three_color_small_matches_brute_force() {
    let con = three_color_construction(3).unwrap();
    for class in &con.classes {
        let g: Graph64 = class.circle().to_graph().unwrap();
        let free = max_diam2_exact(&g, &Diam2Options::default()).unwrap();
        assert_eq!(free.optimum, max_diam2_bruteforce(&g).unwrap().optimum);
    }
}

#[test]
fn k_color_optima() {
    let table: [(usize, usize, &[usize]); 8] = [
        (4, 1, &[3, 3, 3, 3]),
        (4, 2, &[5, 5, 5, 5]),
        (5, 1, &[3, 3, 3, 3, 3]),
        (5, 2, &[5, 5, 5, 6, 5]),
        (6, 1, &[3, 3, 3, 3, 3, 3]),
        (6, 2, &[5, 5, 5, 5, 5, 5]),
        (7, 1, &[3, 3, 5, 3, 3, 5, 3]),
        (7, 2, &[5, 5, 6, 5, 5, 7, 5]),
    ];
    for (k, s, want) in table {
        let con = k_color_construction(k, s).unwrap();
        let got: Vec<usize> = con
            .classes
            .iter()
            .map(|c| {
                let g: Graph64 = c.circle().to_graph().unwrap();
                max_diam2_exact(&g, &Diam2Options::default())
                    .unwrap()
                    .optimum
            })
            .collect();
        assert_eq!(got, want, "k={k} s={s}");
    }
}

#[test]
fn middle_block_covers() {
    for (s, want) in [(3usize, 12), (6, 24), (9, 36)] {
        let n = 6 * s + 1;
        let diffs = CyclicSet::range(n, (2 * s / 3) as i64, s as i64, 1).unwrap();
        let g: Graph64 = CircleGraph::new(diffs).unwrap().to_graph().unwrap();
        let r = min_vertex_cover_exact(&g, Budget::unlimited()).unwrap();
        assert!(r.proven_optimal);
        assert_eq!(r.optimum, want);
    }
}

#[test]
fn wide_word_agrees_with_narrow_word() {
    let con = three_color_construction(6).unwrap();
    for class in &con.classes {
        let a: Graph64 = class.circle().to_graph().unwrap();
        let b: Graph128 = class.circle().to_graph().unwrap();
        let ra = max_diam2_exact(&a, &rooted()).unwrap();
        let rb = max_diam2_exact(&b, &rooted()).unwrap();
        assert_eq!(ra.optimum, rb.optimum);
    }
}

#[test]
fn largest_three_color_instance_fits_wide_word() {
    // s = 12 gives n = 73, beyond one 64-bit word
    let con = three_color_construction(12).unwrap();
    let g: Graph128 = con.classes[0].circle().to_graph().unwrap();
    let r = max_diam2_exact(&g, &rooted()).unwrap();
    assert!(r.proven_optimal);
    assert!(r.optimum <= 2 * 12 + 3);
}
