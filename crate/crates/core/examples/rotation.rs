//! Endpoint rotations, and the rotation witness for two longest paths that
//! share few vertices.
//!
//!     cargo run --example rotation

use pathshare::machinery::{lemma1_witness, normalize_endpoints, rotate_path, rotation_closure};
use pathshare::{enumerate_longest_paths, Graph, Path, Result};

fn main() -> Result<()> {
    // Q = q0 q1 q2 q3 with the chord q0 q2
    let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2)])?;
    let q = Path::new(&g, vec![0, 1, 2, 3])?;
    println!("{q} rotated at pivot 2 -> {}", rotate_path(&g, &q, 2)?);

    let k5 = Graph::complete(5)?;
    let q = Path::new(&k5, vec![0, 1, 2, 3, 4])?;
    println!("rotation closure of {q} in K5: {} paths", rotation_closure(&k5, &q, 25).len());

    // four copies of K4 glued at vertex 0; minimum degree 3
    let mut edges = Vec::new();
    for blob in 0..4 {
        let vs = [0, 3 * blob + 1, 3 * blob + 2, 3 * blob + 3];
        for (i, &u) in vs.iter().enumerate() {
            edges.extend(vs[i + 1..].iter().map(|&v| (u, v)));
        }
    }
    let g = Graph::from_edges(13, edges)?;
    let longest = enumerate_longest_paths(&g)?;
    let p = &longest.paths[0];
    let q = longest
        .paths
        .iter()
        .find(|q| q.vertex_set().intersection(p.vertex_set()).len() <= 2)
        .expect("a path through the other two blobs");
    println!("P = {p}\nQ = {q}");
    println!("normalized Q = {}", normalize_endpoints(&g, p, q, 3)?);
    let w = lemma1_witness(&g, p, q, 3)?;
    println!("witness Q' = {} with i = {} ({:?})", w.path, w.index, w.case);

    // both end neighbors of Q lie on P, but the ends of Q are adjacent
    let g = Graph::from_edges(8, [(5, 1), (1, 6), (6, 3), (3, 7), (0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])?;
    let p = Path::new(&g, vec![5, 1, 6, 3, 7])?;
    let q = Path::new(&g, vec![0, 1, 2, 3, 4])?;
    let w = lemma1_witness(&g, &p, &q, 3)?;
    println!("P = {p}, Q = {q}: Q' = {} with i = {} ({:?})", w.path, w.index, w.case);
    Ok(())
}
