use serde::Serialize;

use crate::connectivity::vertex_connectivity;
use crate::error::{Error, Result};
use crate::flow::{SplitFlow, Terminals};
use crate::graph::{Graph, VertexSet};
use crate::path::Path;

/// `k` paths from `source` to distinct vertices of a target set, pairwise
/// sharing only `source`, with no internal vertex in the target set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FanResult {
    pub source: usize,
    pub paths: Vec<Path>,
}

impl FanResult {
    pub fn terminals(&self) -> Vec<usize> {
        self.paths.iter().map(Path::last).collect()
    }
}

/// A fan of `k` internally disjoint paths from `x` into `targets`.
///
/// Requires `x ∉ targets`, `|targets| ≥ k` and κ(G) ≥ k. A flow below `k`
/// under those conditions is reported as [`Error::Critical`].
pub fn fan_paths(g: &Graph, x: usize, targets: VertexSet, k: usize) -> Result<FanResult> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    if !targets.is_subset(g.vertices()) {
        return Err(Error::precondition("target set leaves the vertex range"));
    }
    if targets.contains(x) {
        return Err(Error::precondition(format!("source {x} lies in the target set")));
    }
    if targets.len() < k {
        return Err(Error::precondition(format!("{} targets cannot end {k} distinct paths", targets.len())));
    }
    let kappa = vertex_connectivity(g);
    if kappa < k {
        return Err(Error::precondition(format!("graph is only {kappa}-connected, fan of {k} requested")));
    }
    fan_paths_unchecked(g, x, targets, k)
        .ok_or_else(|| Error::Critical(format!("{k}-connected graph has no {k}-fan from {x} to {targets:?}")))
}

/// The fan, if the flow reaches `k`; no connectivity check.
pub(crate) fn fan_paths_unchecked(g: &Graph, x: usize, targets: VertexSet, k: usize) -> Option<FanResult> {
    let flow = SplitFlow::run(g, x, Terminals::Distinct(targets), VertexSet::EMPTY, k);
    (flow.value() >= k).then(|| FanResult {
        source: x,
        paths: flow.paths().into_iter().map(Path::from_trusted).collect(),
    })
}
