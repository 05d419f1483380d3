//! Counting, enumerating, and sampling coverings of small universes.
//!
//! The number of coverings of an `n`-element universe is
//! `½ · Σ_{k=0..n} (−1)^k · C(n,k) · 2^(2^(n−k))`: the alternating sum is an
//! inclusion–exclusion over which elements are missed and counts families
//! that may also contain the empty set; adjoining or removing the empty set
//! pairs those families up without changing their union, so the coverings
//! are exactly half of them.  The sequence starts
//! 1, 5, 109, 32297, 2147321017.  Exact integer arithmetic only: the largest
//! supported argument (`n = 6`) needs 65 bits, so everything runs in 128-bit
//! integers and the halving is performed only after checking the sum is even.
//!
//! Full enumeration walks every family of nonempty subsets (there are
//! `2^(2^n − 1)` of them) and keeps those whose union is the universe; it is
//! therefore gated to `n ≤ 4`.  Random sampling is seeded and reproducible:
//! the generator is ChaCha8, which behaves identically on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::universe::Universe;

/// Largest argument `count_coverings` accepts.
pub const MAX_COUNT_N: u32 = 6;

/// Largest universe `enumerate_coverings` accepts.
pub const MAX_ENUMERATION_N: usize = 4;

fn binomial(n: u32, k: u32) -> u128 {
    let k = k.min(n - k.min(n));
    let mut result: u128 = 1;
    for i in 0..k {
        result = result * (n - i) as u128 / (i + 1) as u128;
    }
    result
}

/// Exact number of coverings of an `n`-element universe, for `1 ≤ n ≤ 6`.
pub fn count_coverings(n: u32) -> Result<u128> {
    if n < 1 || n > MAX_COUNT_N {
        return Err(Error::OutOfSupportedRange {
            n,
            min: 1,
            max: MAX_COUNT_N,
        });
    }
    let mut sum: i128 = 0;
    for k in 0..=n {
        let term = binomial(n, k) as i128 * (1i128 << (1u32 << (n - k)));
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if sum <= 0 || sum % 2 != 0 {
        // The alternating sum is provably positive and even on the supported
        // range; reaching this line means the formula was miscomputed.
        panic!("covering count invariant violated for n = {n}: sum = {sum}");
    }
    Ok((sum / 2) as u128)
}

/// Iterator over every covering of a universe, in a fixed canonical order.
///
/// Families of nonempty subsets are encoded as bit masks (bit `s − 1` set
/// means the subset with element mask `s` is in the family) and visited with
/// the mask ascending, so the order is deterministic and reproducible.
#[derive(Debug, Clone)]
pub struct CoveringStream {
    universe: Universe,
    next: u64,
    end: u64,
}

/// Streams all coverings of `universe`; only universes of at most
/// [`MAX_ENUMERATION_N`] elements are supported.
pub fn enumerate_coverings(universe: &Universe) -> Result<CoveringStream> {
    let n = universe.size();
    if n > MAX_ENUMERATION_N {
        return Err(Error::UniverseTooLargeForEnumeration {
            size: n,
            max: MAX_ENUMERATION_N,
        });
    }
    let subsets = (1u64 << n) - 1;
    Ok(CoveringStream {
        universe: universe.clone(),
        next: 0,
        end: 1u64 << subsets,
    })
}

impl Iterator for CoveringStream {
    type Item = Covering;

    fn next(&mut self) -> Option<Covering> {
        let full = self.universe.full_mask();
        while self.next < self.end {
            let family = self.next;
            self.next += 1;
            let mut members = Vec::new();
            let mut union = 0u64;
            let mut rest = family;
            while rest != 0 {
                let subset = rest.trailing_zeros() as u64 + 1;
                rest &= rest - 1;
                members.push(subset);
                union |= subset;
            }
            if union == full {
                return Some(
                    Covering::from_masks(&self.universe, members)
                        .expect("enumerated family covers the universe"),
                );
            }
        }
        None
    }
}

/// Draws a reproducible random covering.
///
/// For universes of at most four elements every nonempty subset is included
/// independently with probability `density`.  For larger universes a bounded
/// number of uniform nonempty subsets is drawn (about `2·n·density` of
/// them), keeping the member count small enough for the exponential
/// cross-check operators.  Either way, elements left uncovered are patched
/// with random sets that contain them, so the result is always a covering.
///
/// The same `(universe, seed, density)` triple yields the same covering on
/// every platform.
///
/// # Panics
///
/// Panics when `density` is outside `(0, 1]`.
pub fn random_covering(universe: &Universe, seed: u64, density: f64) -> Covering {
    assert!(
        density > 0.0 && density <= 1.0,
        "density must lie in (0, 1], got {density}"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = universe.size();
    let full = universe.full_mask();
    let mut masks: Vec<u64> = Vec::new();
    if n <= 4 {
        for subset in 1..=full {
            if rng.random_bool(density) {
                masks.push(subset);
            }
        }
    } else {
        let draws = ((2.0 * n as f64 * density).ceil() as usize).max(1);
        for _ in 0..draws {
            masks.push(rng.random_range(1..=full));
        }
    }
    let mut covered = masks.iter().fold(0u64, |acc, &m| acc | m);
    for i in 0..n {
        if covered & (1 << i) == 0 {
            let patch = (rng.random_range(0..=full) & full) | (1 << i);
            masks.push(patch);
            covered |= patch;
        }
    }
    Covering::from_masks(universe, masks).expect("patched family covers the universe")
}

/// All partitions of the universe, each as a covering of pairwise-disjoint
/// blocks.  Generated from restricted-growth strings, so the order is
/// deterministic.
pub(crate) fn enumerate_partitions(universe: &Universe) -> Vec<Covering> {
    let n = universe.size();
    let mut out = Vec::new();
    let mut assignment = vec![0usize; n];
    loop {
        let block_count = assignment.iter().copied().max().unwrap_or(0) + 1;
        let mut blocks = vec![0u64; block_count];
        for (i, &b) in assignment.iter().enumerate() {
            blocks[b] |= 1u64 << i;
        }
        out.push(
            Covering::from_masks(universe, blocks).expect("partition blocks cover the universe"),
        );
        // Advance the restricted-growth string: each digit may exceed the
        // running maximum of its predecessors by at most one.
        let mut i = n;
        loop {
            if i == 1 {
                return out;
            }
            i -= 1;
            let prefix_max = assignment[..i].iter().copied().max().unwrap_or(0);
            if assignment[i] <= prefix_max {
                assignment[i] += 1;
                for digit in assignment.iter_mut().skip(i + 1) {
                    *digit = 0;
                }
                break;
            }
        }
    }
}

/// A reproducible random partition of the universe.
pub(crate) fn random_partition(universe: &Universe, seed: u64) -> Covering {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = universe.size();
    let block_count = rng.random_range(1..=n);
    let mut blocks = vec![0u64; block_count];
    for i in 0..n {
        blocks[rng.random_range(0..block_count)] |= 1u64 << i;
    }
    blocks.retain(|&b| b != 0);
    Covering::from_masks(universe, blocks).expect("assigned blocks cover the universe")
}
