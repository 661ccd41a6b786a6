//! Vertex connectivity via Menger's theorem on the vertex-split digraph.

use crate::error::{Error, Result};
use crate::flow::{SplitFlow, Terminals};
use crate::graph::{Graph, VertexSet};

/// Minimum `s`–`t` vertex separator of two distinct non-adjacent vertices.
pub fn min_vertex_cut(g: &Graph, s: usize, t: usize) -> Result<VertexSet> {
    check_pair(g, s, t)?;
    let flow = SplitFlow::run(g, s, Terminals::Single(t), VertexSet::EMPTY, usize::MAX);
    let cut = flow.min_cut();
    debug_assert_eq!(cut.len(), flow.value());
    Ok(cut)
}

/// A maximum family of internally disjoint `s`–`t` paths, each listed from
/// `s` to `t`.
pub fn disjoint_paths(g: &Graph, s: usize, t: usize) -> Result<Vec<Vec<usize>>> {
    check_pair(g, s, t)?;
    let flow = SplitFlow::run(g, s, Terminals::Single(t), VertexSet::EMPTY, usize::MAX);
    Ok(flow.paths())
}

fn check_pair(g: &Graph, s: usize, t: usize) -> Result<()> {
    for v in [s, t] {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    if s == t {
        return Err(Error::precondition("source and sink coincide"));
    }
    if g.has_edge(s, t) {
        return Err(Error::precondition(format!("{s}{t} is an edge; no vertex cut separates adjacent vertices")));
    }
    Ok(())
}

fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    SplitFlow::run(g, s, Terminals::Single(t), VertexSet::EMPTY, limit).value()
}

/// Vertex connectivity κ(G). Complete graphs give `n - 1`; disconnected
/// graphs and graphs with fewer than two vertices give 0.
///
/// Every minimum separator either misses vertex 0, and then splits it from
/// some non-neighbor, or contains it, and then splits two non-adjacent
/// neighbors of 0. Those pairs are the only ones tried.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n < 2 || !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    let root = 0;
    let far = g.vertices().difference(g.neighbors(root)).without(root);
    for t in far {
        best = best.min(local_connectivity(g, root, t, best));
    }
    let near: Vec<usize> = g.neighbors(root).iter().collect();
    for (i, &u) in near.iter().enumerate() {
        for &v in &near[i + 1..] {
            if !g.has_edge(u, v) {
                best = best.min(local_connectivity(g, u, v, best));
            }
        }
    }
    best
}

/// `true` when removing fewer than `k` vertices never disconnects `g`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    k == 0 || (g.n() > k && vertex_connectivity(g) >= k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::complete_bipartite;

    #[test]
    fn standard_families() {
        assert_eq!(vertex_connectivity(&complete_bipartite(2, 6).unwrap()), 2);
        assert_eq!(vertex_connectivity(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(vertex_connectivity(&Graph::complete(6).unwrap()), 5);
        assert_eq!(vertex_connectivity(&Graph::path(4).unwrap()), 1);
        assert_eq!(vertex_connectivity(&Graph::empty(1).unwrap()), 0);
        assert_eq!(vertex_connectivity(&Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()), 0);
        assert_eq!(vertex_connectivity(&complete_bipartite(3, 8).unwrap()), 3);
    }

    #[test]
    fn bipartite_cut_is_small_side() {
        let g = complete_bipartite(2, 6).unwrap();
        let cut = min_vertex_cut(&g, 2, 7).unwrap();
        assert_eq!(cut.iter().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn antipodal_cycle_cut() {
        let g = Graph::cycle(6).unwrap();
        let cut = min_vertex_cut(&g, 0, 3).unwrap();
        assert_eq!(cut.len(), 2);
        let rest = g.vertices().difference(cut);
        assert!(!g.reachable_within(0, rest).contains(3));
    }

    #[test]
    fn bowtie_cut_vertex() {
        // triangles {0,1,2} and {2,3,4} share vertex 2
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let cut = min_vertex_cut(&g, 0, 4).unwrap();
        assert_eq!(cut, VertexSet::singleton(2));
    }

    #[test]
    fn adjacent_pair_rejected() {
        let g = Graph::cycle(5).unwrap();
        assert!(matches!(min_vertex_cut(&g, 0, 1), Err(Error::Precondition(_))));
        assert!(min_vertex_cut(&g, 2, 2).is_err());
    }

    #[test]
    fn disjoint_paths_match_cut() {
        let g = complete_bipartite(3, 5).unwrap();
        let paths = disjoint_paths(&g, 3, 4).unwrap();
        assert_eq!(paths.len(), 3);
        for p in &paths {
            assert_eq!((p[0], *p.last().unwrap()), (3, 4));
        }
    }
}
