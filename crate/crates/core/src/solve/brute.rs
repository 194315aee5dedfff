//! Exhaustive oracle for the diameter-two problem.

use super::{diam2::is_diam2, Diam2Witness, SolveResult, Witness};
use crate::bits::VertexBits;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` the exhaustive oracle accepts.
pub const BRUTE_FORCE_MAX_N: usize = 22;

/// Enumerates vertex subsets by decreasing size and stops at the first one
/// inducing diameter <= 2.
pub fn max_diam2_bruteforce<W: VertexBits>(g: &Graph<W>) -> Result<SolveResult> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::GraphTooLarge {
            n,
            cap: BRUTE_FORCE_MAX_N,
        });
    }
    let mut nodes = 0u64;
    for size in (1..=n).rev() {
        // Gosper's hack over all n-bit masks with `size` ones.
        let mut mask: u64 = (1 << size) - 1;
        let limit: u64 = 1 << n;
        while mask < limit {
            nodes += 1;
            let set = W::from_vertices(mask.ones());
            if is_diam2(g, set) {
                let witness = Diam2Witness::certify(g, set)
                    .ok_or_else(|| Error::Invariant("oracle certificate failed".into()))?;
                return Ok(SolveResult {
                    optimum: size,
                    witness: Witness::Diam2(witness),
                    nodes,
                    proven_optimal: true,
                    upper_bound: size,
                });
            }
            let low = mask & mask.wrapping_neg();
            let ripple = mask + low;
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
        }
    }
    Ok(SolveResult {
        optimum: 0,
        witness: Witness::Diam2(Diam2Witness {
            vertices: Vec::new(),
            midpoints: Vec::new(),
        }),
        nodes,
        proven_optimal: true,
        upper_bound: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Graph64;

    #[test]
    fn oracle_examples() {
        assert_eq!(
            max_diam2_bruteforce(&Graph64::cycle(9).unwrap())
                .unwrap()
                .optimum,
            3
        );
        assert_eq!(
            max_diam2_bruteforce(&Graph64::new(5).unwrap())
                .unwrap()
                .optimum,
            1
        );
        assert_eq!(
            max_diam2_bruteforce(&Graph64::new(0).unwrap())
                .unwrap()
                .optimum,
            0
        );
        assert_eq!(
            max_diam2_bruteforce(&Graph64::complete(7).unwrap())
                .unwrap()
                .optimum,
            7
        );
        assert!(max_diam2_bruteforce(&Graph64::cycle(23).unwrap()).is_err());
    }
}
