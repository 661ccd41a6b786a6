//! Vertex connectivity, minimum separators and Menger paths.
//!
//!     cargo run --example connectivity

use pathshare::connectivity::disjoint_paths;
use pathshare::{min_vertex_cut, vertex_connectivity, Graph, Result};

fn main() -> Result<()> {
    let petersen = Graph::from_edges(
        10,
        [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )?;
    for (name, g) in [("C6", Graph::cycle(6)?), ("K5", Graph::complete(5)?), ("Petersen", petersen.clone())] {
        println!("{name:>8}: kappa = {}", vertex_connectivity(&g));
    }

    let cut = min_vertex_cut(&petersen, 0, 7)?;
    println!("min 0-7 separator: {:?}", cut.iter().collect::<Vec<_>>());
    for path in disjoint_paths(&petersen, 0, 7)? {
        println!("  {path:?}");
    }
    Ok(())
}
