//! Inputs shared by the benchmarks.

use prismatic::graph::named;
use prismatic::Graph;

/// Regular self-complementary graphs of increasing order.
pub fn self_complementary_corpus() -> Vec<Graph> {
    vec![
        named::cycle(5),
        named::paley(9).expect("prime power"),
        named::paley(13).expect("prime power"),
        named::paley(17).expect("prime power"),
    ]
}
