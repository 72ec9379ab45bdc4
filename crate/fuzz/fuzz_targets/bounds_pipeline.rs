#![no_main]

use hyperbounds::bounds;
use hyperbounds::spectral::{self, Operator};
use hyperbounds::Hypergraph;
use libfuzzer_sys::fuzz_target;

// Drives the numeric pipeline on whatever parses: degree sums, component
// counts, bound reports and the all-ones bracket must uphold their
// invariants on arbitrary accepted inputs.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(h) = Hypergraph::parse(text) else {
        return;
    };
    if h.vertex_count() > 64 || h.edge_count() > 256 || h.uniformity() > 8 {
        return;
    }

    let sequence = h.degree_sequence();
    let degrees = sequence.degrees();
    let total: u64 = degrees.iter().sum();
    assert_eq!(total as usize, h.uniformity() * h.edge_count());

    let parts = h.components();
    assert!(parts.count() >= 1 && parts.count() <= h.vertex_count());

    if degrees.len() >= h.uniformity() {
        let adjacency = bounds::adjacency_bound(degrees, h.uniformity()).unwrap();
        let signless = bounds::signless_bound(degrees, h.uniformity()).unwrap();
        assert!(adjacency.min_value.is_finite() && adjacency.min_value >= 0.0);
        assert!(signless.min_value.is_finite() && signless.min_value >= 0.0);
        assert_eq!(adjacency.per_s[0].value, degrees[0] as f64);
        assert_eq!(signless.per_s[0].value, 2.0 * degrees[0] as f64);
        assert!(adjacency.exact_quadratic_residual < 1e-9);
        assert!(signless.exact_quadratic_residual < 1e-9);
    }

    let ones = vec![1.0; h.vertex_count()];
    let (lower, upper) = spectral::cw_bracket(&h, Operator::Adjacency, &ones).unwrap();
    assert!(lower <= upper);
    assert_eq!(lower, *degrees.last().unwrap() as f64);
    assert_eq!(upper, degrees[0] as f64);
});
