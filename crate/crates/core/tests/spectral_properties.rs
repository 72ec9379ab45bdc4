//! Properties of the power iteration: bracket validity, degree brackets,
//! similarity invariance, shift consistency, oracle agreement, homogeneity.

mod common;

use hyperbounds::spectral::{self, Operator, SpectralConfig};
use hyperbounds::Hypergraph;
use proptest::prelude::*;
use rand::Rng;

/// Every iterate's bracket contains the final value: each positive iterate
/// yields valid row-sum bounds on the spectral radius.
#[test]
fn every_iterate_brackets_the_final_value() {
    let mut rng = common::rng(0xb4ac_0001);
    let config = SpectralConfig::default();
    for _ in 0..30 {
        let h = common::random_connected(&mut rng, &[2, 3, 4], 10);
        for operator in [Operator::Adjacency, Operator::Signless] {
            let mut trace = Vec::new();
            let est = spectral::power_iteration_traced(&h, operator, &config, &mut trace).unwrap();
            assert!(!trace.is_empty());
            for &(lo, hi) in &trace {
                assert!(
                    lo - 1e-9 <= est.value && est.value <= hi + 1e-9,
                    "bracket ({lo}, {hi}) misses {} on\n{}",
                    est.value,
                    h
                );
            }
        }
    }
}

/// d_n <= rho <= d_1 and 2 d_n <= q <= 2 d_1 (the all-ones bracket), also
/// for disconnected inputs.
#[test]
fn degree_bracket_holds() {
    let mut rng = common::rng(0xb4ac_0002);
    let config = SpectralConfig::default();
    for _ in 0..50 {
        let n = rng.gen_range(3..=10);
        let k = rng.gen_range(2..=3.min(n));
        let total = common::edge_space(n, k);
        let m = rng.gen_range(0..=total);
        let h = Hypergraph::random_m(n, k, m, rng.gen()).unwrap();
        let seq = h.degree_sequence();
        let (d1, dn) = (seq.d(1) as f64, seq.d(n) as f64);

        let rho = spectral::spectral_radius(&h, Operator::Adjacency, &config).unwrap();
        assert!(dn - 1e-6 <= rho.value && rho.value <= d1 + 1e-6, "{h}");
        let q = spectral::spectral_radius(&h, Operator::Signless, &config).unwrap();
        assert!(2.0 * dn - 1e-6 <= q.value && q.value <= 2.0 * d1 + 1e-6, "{h}");
    }
}

/// Conjugating by a random positive diagonal leaves the computed spectral
/// radius unchanged within 2e-6.
#[test]
fn similarity_invariance() {
    let mut rng = common::rng(0xb4ac_0003);
    let config = SpectralConfig::default();
    for _ in 0..25 {
        let h = common::random_connected(&mut rng, &[2, 3], 8);
        let z: Vec<f64> = (0..h.vertex_count())
            .map(|_| rng.gen_range(0.25..=4.0))
            .collect();
        for operator in [Operator::Adjacency, Operator::Signless] {
            let plain = spectral::power_iteration(&h, operator, &config).unwrap();
            let scaled = spectral::power_iteration_scaled(&h, operator, &z, &config).unwrap();
            assert!(
                (plain.value - scaled.value).abs() < 2e-6,
                "unscaled {} vs scaled {} on\n{}",
                plain.value,
                scaled.value,
                h
            );
        }
    }
}

/// The reported radius does not depend on the diagonal shift.
#[test]
fn shift_consistency() {
    let mut rng = common::rng(0xb4ac_0004);
    for _ in 0..20 {
        let h = common::random_connected(&mut rng, &[2, 3, 4], 9);
        for operator in [Operator::Adjacency, Operator::Signless] {
            let small = SpectralConfig {
                shift: 0.5,
                ..SpectralConfig::default()
            };
            let large = SpectralConfig {
                shift: 2.0,
                ..SpectralConfig::default()
            };
            let a = spectral::power_iteration(&h, operator, &small).unwrap();
            let b = spectral::power_iteration(&h, operator, &large).unwrap();
            assert!((a.value - b.value).abs() < 2e-6, "{h}");
        }
    }
}

/// Power iteration agrees with the independent dense-matrix oracle on random
/// connected graphs, both operators.
#[test]
fn oracle_agreement_on_graphs() {
    let mut rng = common::rng(0xb4ac_0005);
    let config = SpectralConfig::default();
    for _ in 0..50 {
        let h = common::random_connected(&mut rng, &[2], 12);
        for operator in [Operator::Adjacency, Operator::Signless] {
            let iterated = spectral::spectral_radius(&h, operator, &config).unwrap();
            let oracle = spectral::matrix_oracle(&h, operator).unwrap();
            assert!(
                (iterated.value - oracle).abs() < 1e-6,
                "power iteration {} vs oracle {} on\n{}",
                iterated.value,
                oracle,
                h
            );
        }
    }
}

proptest! {
    /// apply(c x) = c^{k-1} apply(x) up to floating rounding.
    #[test]
    fn apply_is_homogeneous(seed in any::<u64>(), c in 0.01f64..100.0) {
        let mut rng = common::rng(seed);
        let h = common::random_connected(&mut rng, &[2, 3, 4], 8);
        let n = h.vertex_count();
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(0.1..=10.0)).collect();
        let scaled: Vec<f64> = x.iter().map(|v| c * v).collect();
        let factor = c.powi(h.uniformity() as i32 - 1);
        for operator in [Operator::Adjacency, Operator::Signless] {
            let base = spectral::apply(&h, operator, &x).unwrap();
            let spread = spectral::apply(&h, operator, &scaled).unwrap();
            for i in 0..n {
                let expected = factor * base[i];
                prop_assert!(
                    (spread[i] - expected).abs() <= 1e-12 * expected.abs().max(1e-300),
                    "entry {i}: {} vs {}", spread[i], expected
                );
            }
        }
    }
}
