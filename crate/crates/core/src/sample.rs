//! Seeded instance generators for the property suites.
//!
//! All randomness flows through a [`ChaCha8Rng`] so that a run is fully
//! determined by one `u64` seed; per-property streams come from
//! [`property_rng`], keeping properties independent of each other's draw
//! counts.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cube::BoolSet;
use crate::error::Result;
use crate::graph::GraphSet;
use crate::rat::{rat_frac, Rat};

pub type SuiteRng = ChaCha8Rng;

pub fn suite_rng(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for one property: same seed, distinct stream index.
pub fn property_rng(seed: u64, stream: u64) -> SuiteRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform subset of the cube: each point kept with probability 1/2.
pub fn random_subset(n: usize, rng: &mut SuiteRng) -> Result<BoolSet> {
    let mut s = BoolSet::empty(n)?;
    for enc in 0..1u32 << n {
        if rng.gen::<bool>() {
            s.insert_encoding(enc);
        }
    }
    Ok(s)
}

/// Random subset of the weight-two layer, i.e. a random graph on `n`
/// vertices written as its edge-indicator set.
pub fn random_weight2_subset(n: usize, rng: &mut SuiteRng) -> Result<BoolSet> {
    let mut s = BoolSet::empty(n)?;
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<bool>() {
                s.insert_encoding(1 << i | 1 << j);
            }
        }
    }
    Ok(s)
}

/// Erdős–Rényi graph with edge probability 1/2.
pub fn random_graph(nv: usize, rng: &mut SuiteRng) -> Result<GraphSet> {
    let mut edges = Vec::new();
    for u in 0..nv {
        for v in u + 1..nv {
            if rng.gen::<bool>() {
                edges.push((u, v));
            }
        }
    }
    GraphSet::new(nv, &edges, None)
}

/// Random bipartite graph with left part `0..left`, crossing edges kept
/// with probability 1/2.
pub fn random_bipartite_graph(nv: usize, left: usize, rng: &mut SuiteRng) -> Result<GraphSet> {
    let mut edges = Vec::new();
    for u in 0..left {
        for v in left..nv {
            if rng.gen::<bool>() {
                edges.push((u, v));
            }
        }
    }
    GraphSet::new(nv, &edges, Some(left))
}

/// Random rational half-space `a·x >= b` guaranteed to contain every
/// odd-weight point: starting from small random rational coefficients,
/// `b` is set to the minimum of `a·sigma` over odd `sigma` (computed by a
/// parity-tracking scan, not enumeration), then lowered by a random
/// nonnegative slack half the time so the boundary-tight case stays
/// represented.
pub fn random_odd_halfspace(n: usize, rng: &mut SuiteRng) -> (Vec<Rat>, Rat) {
    let den = rng.gen_range(1..=4i64);
    let nums: Vec<i64> = (0..n).map(|_| rng.gen_range(-8..=8i64)).collect();
    let a: Vec<Rat> = nums.iter().map(|&num| rat_frac(num, den)).collect();

    // min of sum over odd-size supports, tracked per parity coordinate by
    // coordinate; at least one coordinate must be set, hence the sentinel
    let sentinel = i64::MAX / 2;
    let (mut min_even, mut min_odd) = (0i64, sentinel);
    for &num in &nums {
        let new_even = min_even.min(min_odd.saturating_add(num));
        let new_odd = min_odd.min(min_even + num);
        min_even = new_even;
        min_odd = new_odd;
    }
    debug_assert!(min_odd < sentinel, "n = 0 has no odd points");

    let mut b = rat_frac(min_odd, den);
    if rng.gen::<bool>() {
        let slack_num = rng.gen_range(1..=8i64);
        let slack_den = rng.gen_range(1..=4i64);
        b -= rat_frac(slack_num, slack_den);
    }
    (a, b)
}
