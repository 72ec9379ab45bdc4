//! Shared helpers for the integration suites: seeded RNG plus random
//! degree-sequence and random connected-instance supplies.
#![allow(dead_code)]

use hyperbounds::exact;
use hyperbounds::Hypergraph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random non-increasing degree sequence with n in k..=max_n, including
/// occasional zero tails.
pub fn random_degree_sequence(rng: &mut ChaCha8Rng, max_n: usize, max_degree: u64) -> (Vec<u64>, usize) {
    let n = rng.gen_range(2..=max_n);
    let k = rng.gen_range(2..=n.min(8));
    let mut degrees: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=max_degree)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    (degrees, k)
}

pub fn edge_space(n: usize, k: usize) -> usize {
    usize::try_from(&exact::binom(n as i64, k as i64)).unwrap()
}

/// Smallest edge count that can possibly connect n vertices with k-edges.
pub fn min_connect(n: usize, k: usize) -> usize {
    (n - 1).div_ceil(k - 1)
}

/// A random connected instance with uniformity drawn from `ks`, n at most
/// `max_n`, and m spanning sparse to half-dense. Retries with fresh
/// parameters on the (rare) connectivity-sampling failure.
pub fn random_connected(rng: &mut ChaCha8Rng, ks: &[usize], max_n: usize) -> Hypergraph {
    loop {
        let k = ks[rng.gen_range(0..ks.len())];
        let n = rng.gen_range(k..=max_n);
        let total = edge_space(n, k);
        let lo = min_connect(n, k);
        let hi = (total / 2).max(lo).min(total);
        let m = rng.gen_range(lo..=hi);
        if let Ok(h) = Hypergraph::random_connected(n, k, m, rng.gen()) {
            return h;
        }
    }
}
