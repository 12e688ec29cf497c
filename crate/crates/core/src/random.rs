//! Deterministic seeded randomness for reproducible experiments.
//!
//! The generator is SplitMix64 (Steele, Lea & Flood 2014): a tiny, well-mixed
//! 64-bit PRNG with a documented algorithm, so random-graph experiments are
//! bit-reproducible across platforms and runs.

use crate::graph::Graph;

/// SplitMix64 pseudorandom generator.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Next 64 uniformly distributed bits.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform float in `[0, 1)` using the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `[0, bound)` by rejection-free scaling (bias is
    /// negligible at the bounds used here).
    pub fn next_below(&mut self, bound: usize) -> usize {
        (self.next_f64() * bound as f64) as usize % bound.max(1)
    }
}

/// Erdős–Rényi random graph `G(n, p)`: each unordered pair is an edge
/// independently with probability `p`. Identical `(n, p, seed)` inputs give
/// identical graphs.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "probability must lie in [0, 1]");
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                g.add_edge(u, v);
            }
        }
    }
    g
}
