//! Instance checks of the two counting inequalities behind the general
//! bound: the edge-outside-a-longest-path inequality and the
//! `min{4k - ℓ - 3, k}` shared-vertex bound.

use serde::Serialize;

use crate::bounds::bound_submain;
use crate::connectivity::vertex_connectivity;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::longest::{enumerate_longest_paths_with_budget, longest_path_length, LongestPaths};
use crate::path::Path;

/// `ℓ ≥ 4k − 3 − |N({q, q'}) ∩ V(P)|` as plain arithmetic.
pub fn outside_edge_inequality(length: usize, k: usize, neighbors_on_path: usize) -> bool {
    length as i64 >= 4 * k as i64 - 3 - neighbors_on_path as i64
}

/// Checks the inequality for a longest path `p` and an edge `qq'` of `g`
/// with both ends off `p`. Requires κ(G) ≥ 3.
pub fn check_claim2(g: &Graph, p: &Path, q: usize, q2: usize) -> Result<bool> {
    if !p.is_path_in(g) {
        return Err(Error::InvalidPath(format!("{p} is not a path of the graph")));
    }
    if !g.has_edge(q, q2) {
        return Err(Error::precondition(format!("{q}{q2} is not an edge")));
    }
    if p.contains(q) || p.contains(q2) {
        return Err(Error::precondition("edge endpoint lies on the path"));
    }
    let kappa = vertex_connectivity(g);
    if kappa < 3 {
        return Err(Error::precondition(format!("connectivity {kappa} < 3")));
    }
    if p.len() != longest_path_length(g)? {
        return Err(Error::precondition(format!("{p} is not a longest path")));
    }
    Ok(outside_edge_holds(g, kappa, p.len(), p.vertex_set(), q, q2))
}

fn outside_edge_holds(g: &Graph, kappa: usize, length: usize, on_path: VertexSet, q: usize, q2: usize) -> bool {
    let touched = g.neighbors(q).union(g.neighbors(q2)).intersection(on_path);
    outside_edge_inequality(length, kappa, touched.len())
}

/// An edge off a longest path for which the inequality fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutsideEdgeViolation {
    pub path: Path,
    pub edge: (usize, usize),
    pub neighbors_on_path: usize,
}

/// Outcome of checking every (longest path, outside edge) combination.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OutsideEdgeScan {
    /// Distinct (vertex set, edge) instances evaluated.
    pub instances: usize,
    pub violations: Vec<OutsideEdgeViolation>,
}

/// Evaluates the inequality for every enumerated longest path and every edge
/// with both ends off it. Only the vertex set of a path matters, so each
/// distinct set is checked once.
pub fn outside_edge_scan(g: &Graph, kappa: usize, longest: &LongestPaths) -> Result<OutsideEdgeScan> {
    let paths = longest.complete_paths()?;
    let mut scan = OutsideEdgeScan::default();
    if kappa < 3 {
        return Ok(scan);
    }
    for (set, index) in longest.distinct_vertex_sets() {
        let outside = g.vertices().difference(set);
        for q in outside {
            for q2 in g.neighbors(q).intersection(outside).iter().filter(|&q2| q2 > q) {
                scan.instances += 1;
                if !outside_edge_holds(g, kappa, longest.length, set, q, q2) {
                    let touched = g.neighbors(q).union(g.neighbors(q2)).intersection(set);
                    scan.violations.push(OutsideEdgeViolation {
                        path: paths[index].clone(),
                        edge: (q, q2),
                        neighbors_on_path: touched.len(),
                    });
                }
            }
        }
    }
    Ok(scan)
}

/// `L(G) ≥ min{4κ − ℓ − 3, κ}` for the given statistics; κ must be at least 3.
pub fn submain_holds(kappa: usize, length: usize, min_shared: usize) -> Result<bool> {
    Ok(min_shared as i64 >= bound_submain(kappa, length)?)
}

/// Checks the `min{4κ − ℓ − 3, κ}` bound on `g` by enumerating every
/// longest path. Requires κ(G) ≥ 3.
pub fn check_submain(g: &Graph, budget: usize) -> Result<bool> {
    let kappa = vertex_connectivity(g);
    if kappa < 3 {
        return Err(Error::precondition(format!("connectivity {kappa} < 3")));
    }
    let longest = enumerate_longest_paths_with_budget(g, budget)?;
    let l = longest.min_pairwise_intersection()?;
    submain_holds(kappa, longest.length, l.min_shared)
}
