//! Two paths sharing four vertices: their pieces, the auxiliary graph on
//! those pieces, replaceable pairs and the structural predicates.
//!
//! The predicates are stated for longest paths. The two extra edges below
//! make longer paths exist, and the check reports the resulting failures.
//!
//!     cargo run --example auxiliary_graph

use pathshare::generators::complete_bipartite;
use pathshare::machinery::{build_auxiliary_h, check_structural_claims, intersection_pattern, replaceable_pairs};
use pathshare::{Graph, Path, Result};

fn main() -> Result<()> {
    // K_{4,10} plus two edges among the large side
    let mut edges: Vec<_> = complete_bipartite(4, 10)?.edges().collect();
    edges.extend([(9, 5), (10, 6)]);
    let g = Graph::from_edges(14, edges)?;
    let p = Path::new(&g, vec![4, 0, 5, 1, 6, 2, 7, 3, 8])?;
    let q = Path::new(&g, vec![9, 0, 10, 2, 11, 1, 12, 3, 13])?;
    let sigma = intersection_pattern(&p, &q)?;
    println!("P = {p}\nQ = {q}\nsigma = {sigma}");

    let h = build_auxiliary_h(&g, &p, &q)?;
    let names: Vec<String> = h.nodes.iter().map(|s| s.name()).collect();
    println!("pieces: {}", names.join(" "));
    println!("edges of H: {:?}", h.named_edges());

    for pair in replaceable_pairs(&p, &q, sigma)? {
        println!("replaceable {} ~ {} ({:?}) -> {}", pair.x, pair.y, pair.reason, pair.swapped);
    }

    let check = check_structural_claims(&g, &p, &q)?;
    println!("class {} after {:?}", check.class, check.moves);
    for v in &check.violations {
        println!("  {}: {}", v.claim, v.detail);
    }
    if check.violations.is_empty() {
        println!("  no predicate fails");
    }
    Ok(())
}
