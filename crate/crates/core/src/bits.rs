use std::fmt::Debug;

use num_traits::{PrimInt, Unsigned};

/// A machine word used as a set of vertices `0..CAPACITY`.
///
/// Every unsigned primitive integer qualifies; the solvers are written once
/// against this trait and instantiated for `u64` and `u128`.
pub trait VertexBits: PrimInt + Unsigned + Send + Sync + Debug + 'static {
    /// Number of vertices representable.
    fn capacity() -> usize {
        Self::zero().count_zeros() as usize
    }

    fn singleton(i: usize) -> Self {
        Self::one() << i
    }

    /// The set `{0, .., n-1}`.
    fn full(n: usize) -> Self {
        if n >= Self::capacity() {
            Self::max_value()
        } else {
            (Self::one() << n) - Self::one()
        }
    }

    fn has(self, i: usize) -> bool {
        (self >> i) & Self::one() == Self::one()
    }

    fn with(self, i: usize) -> Self {
        self | Self::singleton(i)
    }

    fn without(self, i: usize) -> Self {
        self & !Self::singleton(i)
    }

    fn size(self) -> usize {
        self.count_ones() as usize
    }

    fn first(self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.trailing_zeros() as usize)
        }
    }

    fn ones(self) -> Ones<Self> {
        Ones(self)
    }

    fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        vertices
            .into_iter()
            .fold(Self::zero(), |acc, v| acc.with(v))
    }

    fn to_vec(self) -> Vec<usize> {
        self.ones().collect()
    }
}

impl<T: PrimInt + Unsigned + Send + Sync + Debug + 'static> VertexBits for T {}

/// Ascending iterator over the members of a bitset.
#[derive(Clone, Copy, Debug)]
pub struct Ones<W>(W);

impl<W: VertexBits> Iterator for Ones<W> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let i = self.0.first()?;
        self.0 = self.0 & (self.0 - W::one());
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.size();
        (n, Some(n))
    }
}

impl<W: VertexBits> ExactSizeIterator for Ones<W> {}
