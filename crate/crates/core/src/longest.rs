//! Exact longest paths: length by bitmask DP or branch-and-bound, complete
//! enumeration, and the minimum number of vertices shared by two longest
//! paths.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::path::{Path, PathPair};

/// Largest vertex count handled by the `(subset, endpoint)` DP table.
pub const DP_MAX_VERTICES: usize = 20;

/// Default cap on the number of enumerated paths.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Length (edge count) of a longest path of `g`.
pub fn longest_path_length(g: &Graph) -> Result<usize> {
    if g.n() <= DP_MAX_VERTICES {
        longest_path_length_dp(g)
    } else {
        longest_path_length_bnb(g)
    }
}

/// Bitmask DP: `ends[mask]` holds every vertex at which some path with
/// vertex set `mask` can end.
pub fn longest_path_length_dp(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > DP_MAX_VERTICES {
        return Err(Error::precondition(format!(
            "DP table limited to {DP_MAX_VERTICES} vertices, graph has {n}"
        )));
    }
    let nbrs: Vec<u32> = (0..n).map(|v| g.neighbors(v).bits() as u32).collect();
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = 1;
    for mask in 1..ends.len() {
        let mut tails = ends[mask];
        if tails == 0 {
            continue;
        }
        best = best.max(mask.count_ones());
        while tails != 0 {
            let v = tails.trailing_zeros() as usize;
            tails &= tails - 1;
            let mut next = nbrs[v] & !(mask as u32);
            while next != 0 {
                let u = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[mask | 1 << u] |= 1 << u;
            }
        }
    }
    Ok(best as usize - 1)
}

/// Depth-first search over simple paths, pruned when the vertices still
/// reachable from the current end cannot beat the incumbent.
pub fn longest_path_length_bnb(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut search = BranchAndBound { g, best: 0, cap: n - 1 };
    // Longest paths cannot cross components, so bound by component size first.
    let mut comps = g.components();
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    for comp in comps {
        if comp.len() - 1 <= search.best {
            break;
        }
        search.cap = comp.len() - 1;
        for s in comp {
            search.extend(s, VertexSet::singleton(s), 0);
            if search.best == search.cap {
                break;
            }
        }
    }
    Ok(search.best)
}

struct BranchAndBound<'a> {
    g: &'a Graph,
    best: usize,
    cap: usize,
}

impl BranchAndBound<'_> {
    fn extend(&mut self, end: usize, used: VertexSet, len: usize) {
        if len > self.best {
            self.best = len;
        }
        if self.best == self.cap {
            return;
        }
        let free = self.g.vertices().difference(used);
        let reach = self.g.reachable_within(end, free.with(end)).without(end);
        if len + reach.len() <= self.best {
            return;
        }
        for u in self.g.neighbors(end).intersection(free) {
            self.extend(u, used.with(u), len + 1);
            if self.best == self.cap {
                return;
            }
        }
    }
}

/// Every longest path of a graph, each once in canonical orientation, in
/// deterministic discovery order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongestPaths {
    pub length: usize,
    pub paths: Vec<Path>,
    /// `false` when the budget stopped enumeration; `paths` is then a prefix.
    pub complete: bool,
    pub budget: usize,
}

impl LongestPaths {
    /// The path list, or [`Error::Incomplete`] when enumeration was truncated.
    pub fn complete_paths(&self) -> Result<&[Path]> {
        if self.complete {
            Ok(&self.paths)
        } else {
            Err(Error::Incomplete { budget: self.budget })
        }
    }

    /// Distinct vertex sets of the enumerated paths, each with the index of
    /// the first path covering it.
    pub fn distinct_vertex_sets(&self) -> Vec<(VertexSet, usize)> {
        let mut seen = HashMap::new();
        let mut out = Vec::new();
        for (i, p) in self.paths.iter().enumerate() {
            seen.entry(p.vertex_set()).or_insert_with(|| {
                out.push((p.vertex_set(), i));
            });
        }
        out
    }

    /// L(G): the fewest vertices shared by two longest paths. A path is
    /// paired with itself only when it is the sole longest path.
    pub fn min_pairwise_intersection(&self) -> Result<Intersection> {
        let paths = self.complete_paths()?;
        match paths {
            [] => Err(Error::EmptyGraph),
            [only] => Ok(Intersection::new(only.clone(), only.clone())),
            [a, b, ..] => {
                let sets = self.distinct_vertex_sets();
                let mut best = usize::MAX;
                let mut best_pair = (a, b);
                for (i, &(si, pi)) in sets.iter().enumerate() {
                    for &(sj, pj) in &sets[i + 1..] {
                        let shared = si.intersection(sj).len();
                        if shared < best {
                            best = shared;
                            best_pair = (&paths[pi], &paths[pj]);
                        }
                    }
                }
                Ok(Intersection::new(best_pair.0.clone(), best_pair.1.clone()))
            }
        }
    }
}

/// The minimum shared-vertex count and a pair of longest paths attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Intersection {
    pub min_shared: usize,
    pub witness: PathPair,
}

impl Intersection {
    fn new(p: Path, q: Path) -> Self {
        let witness = PathPair::new(p, q);
        Intersection {
            min_shared: witness.shared_count(),
            witness,
        }
    }
}

/// Enumerates all longest paths with the default budget.
pub fn enumerate_longest_paths(g: &Graph) -> Result<LongestPaths> {
    enumerate_longest_paths_with_budget(g, DEFAULT_BUDGET)
}

/// Enumerates all longest paths, stopping once more than `budget` are found.
pub fn enumerate_longest_paths_with_budget(g: &Graph, budget: usize) -> Result<LongestPaths> {
    let length = longest_path_length(g)?;
    let mut walk = Enumerator {
        g,
        target: length,
        budget,
        stack: Vec::with_capacity(length + 1),
        found: Vec::new(),
        overflow: false,
    };
    for s in 0..g.n() {
        walk.stack.push(s);
        walk.extend(VertexSet::singleton(s));
        walk.stack.pop();
        if walk.overflow {
            break;
        }
    }
    Ok(LongestPaths {
        length,
        paths: walk.found,
        complete: !walk.overflow,
        budget,
    })
}

struct Enumerator<'a> {
    g: &'a Graph,
    target: usize,
    budget: usize,
    stack: Vec<usize>,
    found: Vec<Path>,
    overflow: bool,
}

impl Enumerator<'_> {
    fn extend(&mut self, used: VertexSet) {
        let len = self.stack.len() - 1;
        let end = *self.stack.last().expect("non-empty");
        if len == self.target {
            // each undirected path is met from both ends; keep the canonical one
            if self.stack[0] < end || len == 0 {
                if self.found.len() == self.budget {
                    self.overflow = true;
                    return;
                }
                self.found.push(Path::from_trusted(self.stack.clone()));
            }
            return;
        }
        let free = self.g.vertices().difference(used);
        let reach = self.g.reachable_within(end, free.with(end)).without(end);
        if len + reach.len() < self.target {
            return;
        }
        for u in self.g.neighbors(end).intersection(free) {
            self.stack.push(u);
            self.extend(used.with(u));
            self.stack.pop();
            if self.overflow {
                return;
            }
        }
    }
}

/// L(G) together with a witness pair, using the default budget.
pub fn min_pairwise_intersection(g: &Graph) -> Result<Intersection> {
    enumerate_longest_paths(g)?.min_pairwise_intersection()
}

/// `true` iff `p` is a path of `g` of maximum length.
pub fn is_longest_path(g: &Graph, p: &Path) -> Result<bool> {
    if !p.is_path_in(g) {
        return Err(Error::InvalidPath(format!("{p} is not a path of the graph")));
    }
    Ok(p.len() == longest_path_length(g)?)
}
