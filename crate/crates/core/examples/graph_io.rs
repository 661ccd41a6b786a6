//! Reading and writing graphs: graph6 lines and edge lists, with byte-offset
//! diagnostics on bad input.
//!
//!     cargo run --example graph_io

use pathshare::{encode_graph6, parse_edge_list, parse_graph6, Graph};

fn main() {
    let g = parse_graph6("G]rEE?").unwrap();
    println!("G]rEE? -> n={} edges={:?}", g.n(), g.edges().collect::<Vec<_>>());

    let h = parse_edge_list("# a 5-cycle\n5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    assert_eq!(h, Graph::cycle(5).unwrap());
    println!("edge list C5 -> {}", encode_graph6(&h));

    for bad in ["A~~", "~?A@", "D?"] {
        println!("{bad:>6}: {}", parse_graph6(bad).unwrap_err());
    }
    println!("{:>6}: {}", "edges", parse_edge_list("3\n0 1\n1 1\n").unwrap_err());
}
