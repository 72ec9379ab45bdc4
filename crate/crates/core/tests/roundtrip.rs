//! Structural invariants of parsing, serialization and generation.

mod common;

use hyperbounds::Hypergraph;
use proptest::prelude::*;
use rand::Rng;

proptest! {
    /// parse(serialize(H)) == H, bit-exact, for arbitrary generated inputs.
    #[test]
    fn parse_serialize_roundtrip(n in 2usize..14, k in 2usize..5, m_frac in 0.0f64..=1.0, seed in any::<u64>()) {
        prop_assume!(k <= n);
        let total = common::edge_space(n, k);
        let m = ((total as f64) * m_frac).round() as usize;
        let h = Hypergraph::random_m(n, k, m, seed).unwrap();
        let text = h.to_string();
        let reparsed = Hypergraph::parse(&text).unwrap();
        prop_assert_eq!(&reparsed, &h);
        prop_assert_eq!(reparsed.to_string(), text);
    }

    /// Degree sum equals k m on every generated hypergraph.
    #[test]
    fn degree_sum_is_k_m(n in 2usize..14, k in 2usize..5, m in 0usize..30, seed in any::<u64>()) {
        prop_assume!(k <= n);
        prop_assume!(m <= common::edge_space(n, k));
        let h = Hypergraph::random_m(n, k, m, seed).unwrap();
        let sum: u64 = h.degrees().iter().sum();
        prop_assert_eq!(sum, (k * m) as u64);
    }

    /// Sampling the full edge space yields the complete hypergraph for any seed.
    #[test]
    fn full_density_sampling_is_complete(n in 2usize..10, k in 2usize..5, seed in any::<u64>()) {
        prop_assume!(k <= n);
        let total = common::edge_space(n, k);
        let h = Hypergraph::random_m(n, k, total, seed).unwrap();
        prop_assert_eq!(h, Hypergraph::complete(n, k).unwrap());
    }

    /// Components do not depend on the order edges appear in the input file.
    #[test]
    fn components_invariant_under_edge_reordering(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let h = Hypergraph::random_m(10, 3, rng.gen_range(0..=20), rng.gen()).unwrap();
        let baseline = h.components();

        let mut lines: Vec<String> = h.edges().iter().map(|e| {
            e.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
        }).collect();
        // deterministic shuffle driven by the proptest seed
        for i in (1..lines.len()).rev() {
            lines.swap(i, rng.gen_range(0..=i));
        }
        let mut text = format!("10 3 {}\n", lines.len());
        text.push_str(&lines.join("\n"));
        let reparsed = Hypergraph::parse(&text).unwrap();
        prop_assert_eq!(reparsed.components(), baseline);
    }
}

#[test]
fn generation_is_seed_deterministic() {
    let a = Hypergraph::random_m(9, 3, 14, 123).unwrap();
    let b = Hypergraph::random_m(9, 3, 14, 123).unwrap();
    assert_eq!(a.to_string(), b.to_string());
    let c = Hypergraph::random_connected(9, 3, 5, 77).unwrap();
    let d = Hypergraph::random_connected(9, 3, 5, 77).unwrap();
    assert_eq!(c, d);
}

/// The checked-in fuzz corpus seeds parse (or are rejected) without panics,
/// and everything accepted round-trips.
#[test]
fn fuzz_corpus_seeds_run_clean() {
    let corpus = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus");
    let mut seen = 0;
    for target_dir in std::fs::read_dir(&corpus).expect("fuzz corpus is checked in") {
        for entry in std::fs::read_dir(target_dir.unwrap().path()).unwrap() {
            let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
            if let Ok(h) = Hypergraph::parse(&text) {
                assert_eq!(Hypergraph::parse(&h.to_string()).unwrap(), h);
            }
            seen += 1;
        }
    }
    assert!(seen >= 10, "expected the seed corpus, found {seen} files");
}
