#![no_main]

use hyperbounds::Hypergraph;
use libfuzzer_sys::fuzz_target;

// Parsing must never panic, and anything that parses must round-trip
// bit-exact through the canonical serialization.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(h) = Hypergraph::parse(text) {
        let serialized = h.to_string();
        let reparsed = Hypergraph::parse(&serialized).expect("canonical form reparses");
        assert_eq!(reparsed, h);
        assert_eq!(reparsed.to_string(), serialized);
    }
});
