//! Shared inputs for the benchmarks in `benches/`.

use kronecker::graph::named;
use kronecker::random::random_connected_graph;
use kronecker::Graph;

/// Named factors paired with a label, from sparse to dense.
pub fn factors() -> Vec<(&'static str, Graph)> {
    vec![
        ("cycle12", named::cycle(12)),
        ("petersen", named::petersen()),
        ("k6", named::complete(6)),
        (
            "gnp16_p03",
            random_connected_graph(16, 0.3, 7).expect("p > 0 connects"),
        ),
    ]
}
