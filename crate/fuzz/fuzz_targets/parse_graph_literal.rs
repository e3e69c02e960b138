#![no_main]

use bergekit::graphs::{graph_of, SimpleGraph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else { return };
    if let Ok(g) = SimpleGraph::parse_literal(input) {
        let again = SimpleGraph::parse_literal(&g.to_literal()).unwrap();
        assert_eq!(g, again);
        let _ = g.is_forest();
        let _ = g.is_bipartite_with_cycle();
        if g.edge_count() > 0 {
            assert_eq!(graph_of(&g.incidence_matrix()), g);
        }
    }
});
