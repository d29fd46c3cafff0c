use num_bigint::BigInt;
use num_rational::BigRational;

use super::BoundsError;
use crate::graph::{complement, Graph};

/// Largest order for which [`zero_forcing_number`] runs its exhaustive search.
pub const ZERO_FORCING_CAP: usize = 24;

fn neighbor_masks(g: &Graph) -> Vec<u64> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn closure_mask(nbrs: &[u64], mut blue: u64) -> u64 {
    loop {
        let mut next = blue;
        for (u, &nb) in nbrs.iter().enumerate() {
            if next >> u & 1 == 0 {
                continue;
            }
            let white = nb & !next;
            if white.count_ones() == 1 {
                next |= white;
            }
        }
        if next == blue {
            return blue;
        }
        blue = next;
    }
}

/// Closure of the blue set `s` under the color-change rule: a blue vertex
/// with exactly one white neighbor turns that neighbor blue. The result is
/// the same whatever order the forces are applied in.
pub fn forcing_closure(g: &Graph, s: &[usize]) -> Result<Vec<usize>, BoundsError> {
    let n = g.order();
    if n > 64 {
        return Err(BoundsError::Budget { n, cap: 64 });
    }
    let mut mask = 0u64;
    for &v in s {
        if v >= n {
            return Err(BoundsError::Vertex { v, n });
        }
        mask |= 1 << v;
    }
    let closed = closure_mask(&neighbor_masks(g), mask);
    Ok((0..n).filter(|&v| closed >> v & 1 == 1).collect())
}

/// Next integer with the same number of set bits.
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Minimum size of a zero forcing set, by exhaustive search over seed sets
/// in ascending size starting from the minimum degree (a lower bound).
pub fn zero_forcing_number(g: &Graph) -> Result<usize, BoundsError> {
    let n = g.order();
    if n > ZERO_FORCING_CAP {
        return Err(BoundsError::Budget {
            n,
            cap: ZERO_FORCING_CAP,
        });
    }
    let nbrs = neighbor_masks(g);
    let full = (1u64 << n) - 1;
    for size in g.min_degree().max(1)..n {
        let mut s = (1u64 << size) - 1;
        while s <= full {
            if closure_mask(&nbrs, s) == full {
                return Ok(size);
            }
            s = next_combination(s);
        }
    }
    Ok(n)
}

/// `(n − 1)/(Z(ḡ) + 1) + 1`, a lower bound on the number of distinct
/// distance eigenvalues of a connected graph `g`.
pub fn zf_eigenvalue_bound(g: &Graph) -> Result<BigRational, BoundsError> {
    if !g.is_connected() {
        return Err(BoundsError::Disconnected);
    }
    let z = zero_forcing_number(&complement(g))?;
    let n = g.order();
    Ok(BigRational::new(BigInt::from(n - 1), BigInt::from(z + 1)) + BigInt::from(1))
}
