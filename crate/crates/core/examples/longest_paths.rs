//! Longest paths of K_{2,6}: length, full enumeration, and the pair of
//! paths sharing the fewest vertices.
//!
//!     cargo run --example longest_paths

use pathshare::generators::complete_bipartite;
use pathshare::longest::{longest_path_length_bnb, longest_path_length_dp};
use pathshare::{enumerate_longest_paths, Result};

fn main() -> Result<()> {
    let g = complete_bipartite(2, 6)?;
    println!("K_2,6: n={} m={}", g.n(), g.m());
    println!("length by DP {} / by branch-and-bound {}", longest_path_length_dp(&g)?, longest_path_length_bnb(&g)?);

    let longest = enumerate_longest_paths(&g)?;
    println!("{} longest paths (each listed once, up to reversal)", longest.paths.len());
    for p in longest.paths.iter().take(5) {
        println!("  {p}");
    }
    println!("  ...");
    println!("{} distinct vertex sets", longest.distinct_vertex_sets().len());

    let l = longest.min_pairwise_intersection()?;
    println!("L(G) = {}", l.min_shared);
    println!("  P = {}", l.witness.p);
    println!("  Q = {}", l.witness.q);
    Ok(())
}
