#![no_main]

use libfuzzer_sys::fuzz_target;
use theta_det::graph_text::{parse_graph, write_graph};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_graph(text) {
        if g.vertex_count() <= 64 {
            let _ = g.tree_weight();
        }
        let again = parse_graph(&write_graph(&g)).expect("written graph parses");
        assert_eq!(again.edges(), g.edges());
    }
});
