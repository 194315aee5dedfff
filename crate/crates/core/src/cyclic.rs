//! Subsets of `Z_n` and residue intervals `[a,b]_p`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported modulus.
pub const MAX_MODULUS: usize = 4096;

/// A subset of `Z_n`, stored as a bitset over residues `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclicSet {
    n: usize,
    words: Vec<u64>,
}

impl CyclicSet {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_MODULUS {
            return Err(Error::ModulusOutOfRange(n, MAX_MODULUS));
        }
        Ok(CyclicSet {
            n,
            words: vec![0; n.div_ceil(64)],
        })
    }

    /// `[0, n-1]`.
    pub fn full(n: usize) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for x in 0..n {
            s.insert_residue(x);
        }
        Ok(s)
    }

    /// Collects arbitrary integers, reducing each mod `n`.
    pub fn from_values<I: IntoIterator<Item = i64>>(n: usize, values: I) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for v in values {
            s.insert(v);
        }
        Ok(s)
    }

    /// Integer range `lo..=hi` stepping by `step`, reduced mod `n`.
    /// Empty when `hi < lo`.
    pub fn range(n: usize, lo: i64, hi: i64, step: i64) -> Result<Self> {
        if step < 1 {
            return Err(Error::InvalidInterval(format!(
                "step {step} must be positive"
            )));
        }
        let len = if hi < lo { 0 } else { (hi - lo) / step + 1 };
        Self::from_values(n, (0..len).map(|i| lo + i * step))
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    #[inline]
    fn reduce(&self, v: i64) -> usize {
        v.rem_euclid(self.n as i64) as usize
    }

    fn insert_residue(&mut self, x: usize) {
        self.words[x / 64] |= 1 << (x % 64);
    }

    /// Inserts `v mod n`.
    pub fn insert(&mut self, v: i64) {
        let x = self.reduce(v);
        self.insert_residue(x);
    }

    pub fn remove(&mut self, v: i64) {
        let x = self.reduce(v);
        self.words[x / 64] &= !(1 << (x % 64));
    }

    /// Membership of `v mod n`.
    pub fn contains(&self, v: i64) -> bool {
        let x = self.reduce(v);
        self.words[x / 64] >> (x % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn same_modulus(&self, other: &CyclicSet) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.n, other.n))
        }
    }

    fn zip_words(&self, other: &CyclicSet, f: impl Fn(u64, u64) -> u64) -> Result<CyclicSet> {
        self.same_modulus(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(CyclicSet { n: self.n, words })
    }

    pub fn union(&self, other: &CyclicSet) -> Result<CyclicSet> {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &CyclicSet) -> Result<CyclicSet> {
        self.zip_words(other, |a, b| a & b)
    }

    /// Ordinary set difference `self \ other`.
    pub fn without(&self, other: &CyclicSet) -> Result<CyclicSet> {
        self.zip_words(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &CyclicSet) -> Result<bool> {
        Ok(self.without(other)?.is_empty())
    }

    /// `S + T = { s + t mod n }`.
    pub fn sum_set(&self, other: &CyclicSet) -> Result<CyclicSet> {
        self.same_modulus(other)?;
        let mut out = CyclicSet {
            n: self.n,
            words: vec![0; self.words.len()],
        };
        for s in self.iter() {
            for t in other.iter() {
                out.insert((s + t) as i64);
            }
        }
        Ok(out)
    }

    /// `S - T = { s - t mod n }`.
    pub fn difference_set(&self, other: &CyclicSet) -> Result<CyclicSet> {
        self.sum_set(&other.negate())
    }

    /// `-S = {0} - S`.
    pub fn negate(&self) -> CyclicSet {
        let mut out = CyclicSet {
            n: self.n,
            words: vec![0; self.words.len()],
        };
        for s in self.iter() {
            out.insert(-(s as i64));
        }
        out
    }

    /// `S^c = [0, n-1] - S`.
    pub fn complement(&self) -> CyclicSet {
        let mut out = CyclicSet {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        let tail = self.n % 64;
        if tail != 0 {
            if let Some(last) = out.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        out
    }

    /// `x + S`.
    pub fn rotate(&self, x: i64) -> CyclicSet {
        let mut out = CyclicSet {
            n: self.n,
            words: vec![0; self.words.len()],
        };
        for s in self.iter() {
            out.insert(s as i64 + x);
        }
        out
    }

    /// Members lying in `[1, floor(n/2)]`.
    pub fn lower_half(&self) -> CyclicSet {
        let mut out = self.clone();
        out.remove(0);
        for x in self.n / 2 + 1..self.n {
            out.remove(x as i64);
        }
        out
    }

    /// Maximal runs of consecutive residues, merging a run through `n-1 -> 0`.
    /// A wrapped run is reported as `(a, b)` with `a > b`.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let members = self.to_vec();
        if members.len() == self.n {
            return vec![(0, self.n - 1)];
        }
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for x in members {
            match runs.last_mut() {
                Some((_, b)) if *b + 1 == x => *b = x,
                _ => runs.push((x, x)),
            }
        }
        if runs.len() > 1 && runs[0].0 == 0 && runs[runs.len() - 1].1 == self.n - 1 {
            let (_, b) = runs.remove(0);
            if let Some(last) = runs.last_mut() {
                last.1 = b;
            }
        }
        runs
    }

    /// Compact interval notation such as `[7,12]` or `[2,3] u [16,17]`.
    pub fn interval_notation(&self) -> String {
        if self.is_empty() {
            return "{}".to_string();
        }
        self.runs()
            .iter()
            .map(|(a, b)| format!("[{a},{b}]"))
            .collect::<Vec<_>>()
            .join(" u ")
    }
}

impl fmt::Debug for CyclicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicSet(n={}, {:?})", self.n, self.to_vec())
    }
}

impl fmt::Display for CyclicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.interval_notation())
    }
}

/// `[a,b]_p` over `Z_n`.
///
/// For `a <= b` this is `{x : a <= x <= b, x = a mod p}` and requires
/// `a = b mod p`. For `a > b` it wraps: `[a,c]_p u [d,b]_p` where `c` is the
/// largest residue congruent to `a` mod `p` and `d` the least residue
/// congruent to `b` mod `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidueInterval {
    a: usize,
    b: usize,
    p: usize,
    n: usize,
}

impl ResidueInterval {
    pub fn new(a: usize, b: usize, p: usize, n: usize) -> Result<Self> {
        if n == 0 || n > MAX_MODULUS {
            return Err(Error::ModulusOutOfRange(n, MAX_MODULUS));
        }
        if p == 0 {
            return Err(Error::InvalidInterval("step must be at least 1".into()));
        }
        if a >= n || b >= n {
            return Err(Error::InvalidInterval(format!(
                "endpoints {a},{b} outside [0,{}]",
                n - 1
            )));
        }
        if a <= b && !(b - a).is_multiple_of(p) {
            return Err(Error::InvalidInterval(format!(
                "{a} and {b} are not congruent mod {p}"
            )));
        }
        Ok(ResidueInterval { a, b, p, n })
    }

    /// `[a,b]` with unit step.
    pub fn unit(a: usize, b: usize, n: usize) -> Result<Self> {
        Self::new(a, b, 1, n)
    }

    pub fn materialize(&self) -> CyclicSet {
        let (a, b, p, n) = (self.a as i64, self.b as i64, self.p as i64, self.n as i64);
        // Endpoints were validated, so these never fail.
        let build = |lo: i64, hi: i64| CyclicSet::range(self.n, lo, hi, p).expect("validated");
        if a <= b {
            build(a, b)
        } else {
            let c = a + (n - 1 - a) / p * p;
            let d = b % p;
            let head = build(a, c);
            let tail = build(d, b);
            head.union(&tail).expect("same modulus")
        }
    }

    /// `1 + b - a` for `a <= b`, `|[a,n-1]| + |[0,b]|` otherwise.
    pub fn length(&self) -> usize {
        if self.a <= self.b {
            1 + self.b - self.a
        } else {
            (self.n - self.a) + (self.b + 1)
        }
    }
}

impl fmt::Display for ResidueInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == 1 {
            write!(f, "[{},{}]", self.a, self.b)
        } else {
            write!(f, "[{},{}]_{}", self.a, self.b, self.p)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(n: usize, xs: &[i64]) -> CyclicSet {
        CyclicSet::from_values(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn wraparound_unit_interval() {
        let iv = ResidueInterval::unit(5, 2, 7).unwrap();
        assert_eq!(iv.materialize().to_vec(), vec![0, 1, 2, 5, 6]);
        assert_eq!(iv.length(), 5);
    }

    #[test]
    fn stepped_interval() {
        let iv = ResidueInterval::new(1, 5, 2, 9).unwrap();
        assert_eq!(iv.materialize().to_vec(), vec![1, 3, 5]);
    }

    #[test]
    fn single_generator_interval() {
        let s = 1;
        let iv = ResidueInterval::unit(2 * s + 1, 3 * s, 6 * s + 1).unwrap();
        assert_eq!(iv.materialize().to_vec(), vec![3]);
    }

    #[test]
    fn stepped_wraparound_uses_step_residue() {
        // [7,2]_2 in Z_9: 7 and the residue of 2 mod 2 starts the tail.
        let iv = ResidueInterval::new(7, 2, 2, 9).unwrap();
        assert_eq!(iv.materialize().to_vec(), vec![0, 2, 7]);
    }

    #[test]
    fn invalid_intervals() {
        assert!(ResidueInterval::new(1, 4, 2, 9).is_err());
        assert!(ResidueInterval::new(1, 5, 0, 9).is_err());
        assert!(ResidueInterval::new(1, 9, 1, 9).is_err());
        assert!(ResidueInterval::new(0, 0, 1, 0).is_err());
    }

    #[test]
    fn sum_sets() {
        assert_eq!(
            set(7, &[3]).sum_set(&set(7, &[3])).unwrap().to_vec(),
            vec![6]
        );
        let t: i64 = 1;
        let n = 19;
        let l = CyclicSet::range(n, 3 * t + 1, 5 * t, 1).unwrap();
        let m = CyclicSet::range(n, 8 * t + 1, 10 * t, 1).unwrap();
        assert_eq!(l.sum_set(&m).unwrap().to_vec(), vec![13, 14, 15]);
        let big = CyclicSet::range(n, 5 * t + 1, 8 * t, 1).unwrap();
        // direct enumeration of pairwise sums
        let mut expected: Vec<usize> = Vec::new();
        for a in 6..=8usize {
            for b in 6..=8usize {
                expected.push((a + b) % n);
            }
        }
        expected.sort();
        expected.dedup();
        assert_eq!(big.sum_set(&big).unwrap().to_vec(), expected);
        assert_eq!(expected, vec![12, 13, 14, 15, 16]);
    }

    #[test]
    fn modulus_mismatch() {
        assert!(matches!(
            set(7, &[1]).sum_set(&set(9, &[1])),
            Err(Error::ModulusMismatch(7, 9))
        ));
    }

    #[test]
    fn unary_ops() {
        assert_eq!(set(7, &[3]).negate().to_vec(), vec![4]);
        assert_eq!(set(7, &[0, 1, 3, 4, 6]).complement().to_vec(), vec![2, 5]);
        assert_eq!(set(5, &[0, 1]).rotate(2).to_vec(), vec![2, 3]);
    }

    #[test]
    fn notation_merges_wrapped_runs() {
        let s = set(19, &[2, 3, 16, 17]);
        assert_eq!(s.interval_notation(), "[2,3] u [16,17]");
        let w = set(19, &[17, 18, 0, 1]);
        assert_eq!(w.interval_notation(), "[17,1]");
        assert_eq!(CyclicSet::full(5).unwrap().interval_notation(), "[0,4]");
    }

    #[test]
    fn complement_masks_tail_bits() {
        let s = CyclicSet::empty(70).unwrap().complement();
        assert_eq!(s.len(), 70);
    }

    fn brute_interval(a: usize, b: usize, p: usize, n: usize) -> Vec<usize> {
        let in_range =
            |x: usize, lo: usize, hi: usize, r: usize| lo <= x && x <= hi && x % p == r % p;
        (0..n)
            .filter(|&x| {
                if a <= b {
                    in_range(x, a, b, a)
                } else {
                    in_range(x, a, n - 1, a) || in_range(x, 0, b, b)
                }
            })
            .collect()
    }

    #[test]
    fn materialize_matches_filter_exhaustively() {
        for n in 1..=50 {
            for p in 1..=5 {
                for a in 0..n {
                    for b in 0..n {
                        match ResidueInterval::new(a, b, p, n) {
                            Ok(iv) => {
                                assert_eq!(iv.materialize().to_vec(), brute_interval(a, b, p, n))
                            }
                            Err(_) => assert!(a <= b && (b - a) % p != 0),
                        }
                    }
                }
            }
        }
    }

    fn arb_set() -> impl Strategy<Value = CyclicSet> {
        (1usize..60).prop_flat_map(|n| {
            proptest::collection::vec(0..n as i64, 0..20)
                .prop_map(move |xs| CyclicSet::from_values(n, xs).unwrap())
        })
    }

    proptest! {
        #[test]
        fn involutions(s in arb_set()) {
            prop_assert_eq!(s.negate().negate(), s.clone());
            prop_assert_eq!(s.complement().complement(), s);
        }

        #[test]
        fn rotation_composes(s in arb_set(), x in -100i64..100, y in -100i64..100) {
            let n = s.modulus() as i64;
            prop_assert_eq!(s.rotate(y).rotate(x), s.rotate((x + y).rem_euclid(n)));
        }

        #[test]
        fn singleton_sum_preserves_size(s in arb_set(), t in 0i64..1000) {
            let single = CyclicSet::from_values(s.modulus(), [t]).unwrap();
            prop_assert_eq!(s.sum_set(&single).unwrap().len(), s.len());
        }
    }
}
