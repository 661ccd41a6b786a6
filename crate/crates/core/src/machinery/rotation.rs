//! Endpoint rotations of a path and the witness search built on them.
//!
//! For `Q = q0 q1 .. qℓ` and a neighbor `q_{i+1}` of `q0` with `i ≥ 1`, the
//! rotation at `q0` is `q_i .. q0 q_{i+1} .. qℓ`: same vertex set, same
//! length, new first vertex `q_i`.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum End {
    Front,
    Back,
}

/// One rotation: the endpoint that moves, the chord's far end, and the new
/// endpoint it produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RotationStep {
    pub end: End,
    pub old_endpoint: usize,
    pub pivot: usize,
    pub new_endpoint: usize,
}

impl RotationStep {
    pub fn apply(&self, g: &Graph, q: &Path) -> Result<Path> {
        let rotated = match self.end {
            End::Front => rotate_path(g, q, self.pivot)?,
            End::Back => rotate_path(g, &q.reversed(), self.pivot)?.reversed(),
        };
        let new_end = match self.end {
            End::Front => rotated.first(),
            End::Back => rotated.last(),
        };
        if new_end != self.new_endpoint {
            return Err(Error::precondition(format!(
                "rotation at pivot {} ends at {new_end}, not {}",
                self.pivot, self.new_endpoint
            )));
        }
        Ok(rotated)
    }
}

/// Rotates `q` at its first vertex using the chord from `q0` to `pivot`.
pub fn rotate_path(g: &Graph, q: &Path, pivot: usize) -> Result<Path> {
    let seq = q.vertices();
    let q0 = seq[0];
    let j = q
        .position(pivot)
        .ok_or_else(|| Error::precondition(format!("pivot {pivot} is not on the path")))?;
    if j == 0 {
        return Err(Error::precondition("pivot is the endpoint itself"));
    }
    if j == 1 {
        return Err(Error::precondition(format!("pivot {pivot} is q1; the rotation would be the identity")));
    }
    if !g.has_edge(q0, pivot) {
        return Err(Error::precondition(format!("pivot {pivot} is not adjacent to endpoint {q0}")));
    }
    let mut out = Vec::with_capacity(seq.len());
    out.extend(seq[..j].iter().rev());
    out.extend_from_slice(&seq[j..]);
    Ok(Path::from_trusted(out))
}

fn rotations(g: &Graph, q: &Path) -> Vec<(RotationStep, Path)> {
    let seq = q.vertices();
    let last = seq.len() - 1;
    let mut out = Vec::new();
    for (j, &v) in seq.iter().enumerate().skip(2) {
        if g.has_edge(seq[0], v) {
            let mut r = seq[..j].to_vec();
            r.reverse();
            r.extend_from_slice(&seq[j..]);
            let step = RotationStep { end: End::Front, old_endpoint: seq[0], pivot: v, new_endpoint: seq[j - 1] };
            out.push((step, Path::from_trusted(r)));
        }
    }
    for j in (0..last.saturating_sub(1)).rev() {
        let v = seq[j];
        if g.has_edge(seq[last], v) {
            let mut r = seq[..=j].to_vec();
            r.extend(seq[j + 1..].iter().rev());
            let step = RotationStep { end: End::Back, old_endpoint: seq[last], pivot: v, new_endpoint: seq[j + 1] };
            out.push((step, Path::from_trusted(r)));
        }
    }
    out
}

/// Every path reachable from `q` by endpoint rotations, in breadth-first
/// order, stopping after `cap` paths.
pub fn rotation_closure(g: &Graph, q: &Path, cap: usize) -> Vec<Path> {
    let mut seen = HashSet::from([q.vertices().to_vec()]);
    let mut order = vec![q.clone()];
    let mut queue = VecDeque::from([q.clone()]);
    while let Some(cur) = queue.pop_front() {
        for (_, next) in rotations(g, &cur) {
            if order.len() >= cap {
                return order;
            }
            if seen.insert(next.vertices().to_vec()) {
                order.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    order
}

fn check_pair_inputs(g: &Graph, p: &Path, q: &Path, k: usize) -> Result<VertexSet> {
    for path in [p, q] {
        if !path.is_path_in(g) {
            return Err(Error::InvalidPath(format!("{path} is not a path of the graph")));
        }
    }
    if p.len() != q.len() {
        return Err(Error::precondition(format!(
            "paths have lengths {} and {}; both must be longest",
            p.len(),
            q.len()
        )));
    }
    let shared = p.vertex_set().intersection(q.vertex_set());
    if shared.len() + 1 > k {
        return Err(Error::precondition(format!(
            "paths share {} vertices; at most k - 1 = {} allowed",
            shared.len(),
            k.saturating_sub(1)
        )));
    }
    Ok(shared)
}

/// Rotates the front so that the first vertex leaves `avoid`, using the
/// first chord `q0 q_{i+1}` with `q_i` outside `avoid`.
fn rotate_front_off(g: &Graph, q: &Path, avoid: VertexSet) -> Option<Path> {
    if !avoid.contains(q.first()) {
        return Some(q.clone());
    }
    let seq = q.vertices();
    (2..seq.len())
        .find(|&j| g.has_edge(seq[0], seq[j]) && !avoid.contains(seq[j - 1]))
        .map(|j| rotate_path(g, q, seq[j]).expect("chord checked"))
}

/// Rotates `q` until neither endpoint lies on `p`, keeping its vertex set.
///
/// Inputs are expected to be two longest paths of a `k`-connected graph
/// sharing at most `k - 1` vertices; connectivity is the caller's to verify.
/// Tries the direct two-rotation construction first, then a breadth-first
/// search of the rotation closure capped at `|V(Q)|²` paths.
pub fn normalize_endpoints(g: &Graph, p: &Path, q: &Path, k: usize) -> Result<Path> {
    check_pair_inputs(g, p, q, k)?;
    normalize_unchecked(g, p.vertex_set(), q)
}

fn normalize_unchecked(g: &Graph, on_p: VertexSet, q: &Path) -> Result<Path> {
    let off = |path: &Path| !on_p.contains(path.first()) && !on_p.contains(path.last());
    if off(q) {
        return Ok(q.clone());
    }
    let direct = rotate_front_off(g, q, on_p)
        .and_then(|front| rotate_front_off(g, &front.reversed(), on_p))
        .map(|both| both.reversed());
    if let Some(path) = direct.filter(|path| off(path)) {
        return Ok(path);
    }
    let cap = q.vertex_count() * q.vertex_count();
    rotation_closure(g, q, cap)
        .into_iter()
        .find(|path| off(path))
        .ok_or_else(|| {
            Error::precondition(format!(
                "lemma precondition violated: no rotation of {q} within {cap} paths has both ends off P"
            ))
        })
}

/// Which step of the construction produced a [`RotationWitness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum WitnessCase {
    /// The neighbor of one end is already off `P`.
    NeighborOffP,
    /// The two ends are adjacent, closing a cycle that is reopened.
    EndsAdjacent,
    /// A chord `q0 q_j` with `q_{j-1}, q_{j-2}` off `P` gives a rotation.
    ChordBeforeTwoFree,
    /// Two consecutive neighbors of `q0` follow a shared vertex.
    Pigeonhole,
    /// Found only by scanning the rotation closure.
    ClosureScan,
}

/// A longest path `Q'` on the vertex set of `Q` with index `i` such that
/// `q'0, q'i` avoid `P`, `q'i ~ q'0`, and `i = 1` or `q'0 ~ q'_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RotationWitness {
    pub path: Path,
    pub index: usize,
    pub case: WitnessCase,
}

/// First index satisfying the witness conditions on `q` read front to back.
fn witness_index(g: &Graph, on_p: VertexSet, q: &Path) -> Option<usize> {
    let seq = q.vertices();
    let q0 = seq[0];
    if on_p.contains(q0) {
        return None;
    }
    let len = q.len();
    (1..=len).find(|&i| {
        let qi = seq[i];
        !on_p.contains(qi)
            && g.has_edge(q0, qi)
            && (i == 1 || (i < len && g.has_edge(q0, seq[i + 1])))
    })
}

/// Builds the witness path by following the endpoint-rotation argument:
/// normalize both ends off `P`, then try the neighbor, end-adjacency and
/// chord cases before the pigeonhole scan.
///
/// Fails with [`Error::WitnessNotFound`] when even the rotation closure has
/// no witness; for inputs meeting the hypotheses that would be a
/// counterexample.
pub fn lemma1_witness(g: &Graph, p: &Path, q: &Path, k: usize) -> Result<RotationWitness> {
    check_pair_inputs(g, p, q, k)?;
    let on_p = p.vertex_set();
    let normalized = normalize_unchecked(g, on_p, q)?;
    let seq = normalized.vertices();
    let len = normalized.len();
    let found = |path: Path, index, case| Ok(RotationWitness { path, index, case });

    if len >= 1 && !on_p.contains(seq[1]) {
        return found(normalized, 1, WitnessCase::NeighborOffP);
    }
    if len >= 1 && !on_p.contains(seq[len - 1]) {
        return found(normalized.reversed(), 1, WitnessCase::NeighborOffP);
    }
    if len >= 2 && g.has_edge(seq[0], seq[len]) {
        let mut r = vec![seq[len]];
        r.extend_from_slice(&seq[..len]);
        return found(Path::from_trusted(r), 1, WitnessCase::EndsAdjacent);
    }
    for j in 2..=len {
        if g.has_edge(seq[0], seq[j]) && !on_p.contains(seq[j - 1]) && !on_p.contains(seq[j - 2]) {
            let rotated = rotate_path(g, &normalized, seq[j]).expect("chord checked");
            return found(rotated, 1, WitnessCase::ChordBeforeTwoFree);
        }
    }
    for i in 2..len {
        if on_p.contains(seq[i - 1])
            && !on_p.contains(seq[i])
            && g.has_edge(seq[0], seq[i])
            && g.has_edge(seq[0], seq[i + 1])
        {
            return found(normalized, i, WitnessCase::Pigeonhole);
        }
    }

    let cap = normalized.vertex_count() * normalized.vertex_count();
    let closure = rotation_closure(g, &normalized, cap);
    for path in &closure {
        for candidate in [path.clone(), path.reversed()] {
            if let Some(index) = witness_index(g, on_p, &candidate) {
                return found(candidate, index, WitnessCase::ClosureScan);
            }
        }
    }
    Err(Error::WitnessNotFound {
        closure: closure.iter().map(|p| p.vertices().to_vec()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_at_front() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap();
        let q = Path::new(&g, vec![0, 1, 2, 3]).unwrap();
        let r = rotate_path(&g, &q, 2).unwrap();
        assert_eq!(r.vertices(), &[1, 0, 2, 3]);
        assert!(r.is_path_in(&g));
    }

    #[test]
    fn rotation_on_four_cycle() {
        let g = Graph::cycle(4).unwrap();
        // a,b,c,d = 3,2,1,0 with chord a-d
        let q = Path::new(&g, vec![3, 2, 1, 0]).unwrap();
        let r = rotate_path(&g, &q.reversed(), 3).unwrap().reversed();
        assert_eq!(r.vertices(), &[3, 0, 1, 2]);
        assert_eq!(r.vertex_set(), q.vertex_set());
        let step = RotationStep { end: End::Back, old_endpoint: 0, pivot: 3, new_endpoint: 2 };
        assert_eq!(step.apply(&g, &q).unwrap().reversed().vertices(), &[2, 1, 0, 3]);
    }

    #[test]
    fn rotation_errors() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap();
        let q = Path::new(&g, vec![0, 1, 2, 3]).unwrap();
        assert!(rotate_path(&g, &q, 1).is_err());
        assert!(rotate_path(&g, &q, 3).is_err());
        assert!(rotate_path(&g, &q, 0).is_err());
    }

    #[test]
    fn rotation_closure_preserves_vertex_set() {
        let g = Graph::complete(5).unwrap();
        let q = Path::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        let closure = rotation_closure(&g, &q, 1000);
        // every Hamiltonian path of K5 with any orientation
        assert_eq!(closure.len(), 120);
        assert!(closure.iter().all(|p| p.vertex_set() == q.vertex_set() && p.is_path_in(&g)));
    }

    #[test]
    fn normalize_identity_when_already_off() {
        let g = Graph::complete(6).unwrap();
        let p = Path::new(&g, vec![0, 1, 2]).unwrap();
        let q = Path::new(&g, vec![3, 1, 4]).unwrap();
        assert_eq!(normalize_endpoints(&g, &p, &q, 3).unwrap(), q);
    }

    #[test]
    fn normalize_rejects_too_many_shared() {
        let g = Graph::complete(6).unwrap();
        let p = Path::new(&g, vec![0, 1, 2]).unwrap();
        let q = Path::new(&g, vec![3, 1, 2]).unwrap();
        assert!(matches!(normalize_endpoints(&g, &p, &q, 2), Err(Error::Precondition(_))));
    }
}
