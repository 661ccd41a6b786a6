//! Internally disjoint paths from a vertex into a target set.
//!
//!     cargo run --example fan

use pathshare::generators::random_k_connected;
use pathshare::machinery::fan_paths;
use pathshare::{Result, VertexSet};

fn main() -> Result<()> {
    let g = random_k_connected(12, 0.45, 4, 2024, 10_000)?;
    println!("graph {} (kappa >= 4)", pathshare::encode_graph6(&g));
    let targets: VertexSet = [7, 8, 9, 10, 11].into_iter().collect();
    let fan = fan_paths(&g, 0, targets, 4)?;
    for p in &fan.paths {
        println!("  {p}");
    }
    println!("terminals {:?}", fan.terminals());
    Ok(())
}
