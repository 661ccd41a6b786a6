//! Structure of two paths meeting in exactly four vertices `S`: the pieces
//! of `P − S` and `Q − S`, the auxiliary graph joining pieces that are linked
//! through vertices off both paths, replaceable pairs, and edge-absence
//! predicates that must hold when both paths are longest.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::machinery::sigma::{
    canonical_sigma_with_moves, intersection_pattern, Permutation, SigmaClass, Symmetry,
};
use crate::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    P,
    Q,
}

/// Position of a piece along its path, with shared vertices named by their
/// label `1..=4` (order along `P`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SegmentKind {
    /// From the first endpoint up to the first shared vertex.
    Head,
    /// Strictly between two consecutive shared vertices, in traversal order.
    Between(u8, u8),
    /// From the last shared vertex to the second endpoint.
    Tail,
}

/// A component of `P − S` or `Q − S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub side: Side,
    pub kind: SegmentKind,
    /// Vertices in path order.
    pub vertices: Vec<usize>,
    pub set: VertexSet,
    /// Position of the first vertex on its path.
    pub start: usize,
}

impl Segment {
    pub fn name(&self) -> String {
        let side = match self.side {
            Side::P => 'P',
            Side::Q => 'Q',
        };
        match self.kind {
            SegmentKind::Head => format!("{side}0"),
            SegmentKind::Tail => format!("{side}1"),
            SegmentKind::Between(a, b) => format!("{side}(v{a},v{b})"),
        }
    }

    fn is_end_piece(&self) -> bool {
        matches!(self.kind, SegmentKind::Head | SegmentKind::Tail)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for Segment {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Two paths sharing exactly four vertices, none of them an endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharedFrame {
    pub p: Path,
    pub q: Path,
    /// `labels[i]` is the vertex `v_{i+1}`.
    pub labels: [usize; 4],
    pub sigma: Permutation,
}

impl SharedFrame {
    pub fn new(p: &Path, q: &Path) -> Result<Self> {
        let sigma = intersection_pattern(p, q)?;
        let shared = p.vertex_set().intersection(q.vertex_set());
        for end in [p.first(), p.last(), q.first(), q.last()] {
            if shared.contains(end) {
                return Err(Error::precondition(format!("endpoint {end} is a shared vertex")));
            }
        }
        let mut labels = [0; 4];
        for (slot, &v) in p.vertices().iter().filter(|&&v| shared.contains(v)).enumerate() {
            labels[slot] = v;
        }
        Ok(SharedFrame { p: p.clone(), q: q.clone(), labels, sigma })
    }

    pub fn shared(&self) -> VertexSet {
        self.labels.into_iter().collect()
    }

    fn label_of(&self, v: usize) -> Option<u8> {
        self.labels.iter().position(|&u| u == v).map(|i| i as u8 + 1)
    }

    /// The vertex `v_label`.
    pub fn vertex(&self, label: u8) -> usize {
        self.labels[label as usize - 1]
    }

    /// Pieces of `P − S` then `Q − S`, each in path order.
    pub fn segments(&self) -> Vec<Segment> {
        let mut out = self.split(Side::P);
        out.extend(self.split(Side::Q));
        out
    }

    fn split(&self, side: Side) -> Vec<Segment> {
        let path = match side {
            Side::P => &self.p,
            Side::Q => &self.q,
        };
        let mut out = Vec::new();
        let mut run: Vec<usize> = Vec::new();
        let mut run_start = 0;
        let mut prev_label: Option<u8> = None;
        for (i, &v) in path.vertices().iter().enumerate() {
            match self.label_of(v) {
                Some(label) => {
                    if !run.is_empty() {
                        let kind = match prev_label {
                            None => SegmentKind::Head,
                            Some(a) => SegmentKind::Between(a, label),
                        };
                        out.push(make_segment(side, kind, std::mem::take(&mut run), run_start));
                    }
                    prev_label = Some(label);
                }
                None => {
                    if run.is_empty() {
                        run_start = i;
                    }
                    run.push(v);
                }
            }
        }
        if !run.is_empty() {
            out.push(make_segment(side, SegmentKind::Tail, run, run_start));
        }
        out
    }

    /// The graph `L` formed by the edges of both paths, on `n` vertices.
    pub fn union_graph(&self, n: usize) -> Graph {
        let mut builder = GraphBuilder::new(n).expect("vertex ids fit the host graph");
        for path in [&self.p, &self.q] {
            for w in path.vertices().windows(2) {
                builder.add_edge(w[0], w[1]).expect("path edges are valid");
            }
        }
        builder.build()
    }

    fn vertex_bound(&self) -> usize {
        self.p.vertices().iter().chain(self.q.vertices()).max().map_or(0, |m| m + 1)
    }
}

fn make_segment(side: Side, kind: SegmentKind, vertices: Vec<usize>, start: usize) -> Segment {
    let set = vertices.iter().copied().collect();
    Segment { side, kind, vertices, set, start }
}

/// The auxiliary graph: nodes are the pieces of `P − S` and `Q − S`; two
/// pieces are adjacent when a path of `G − S` joins them with every internal
/// vertex off both `P` and `Q` (a direct edge counts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxiliaryH {
    pub frame: SharedFrame,
    pub nodes: Vec<Segment>,
    adjacency: Vec<Vec<bool>>,
}

impl AuxiliaryH {
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a][b]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.nodes.len();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.adjacency[a][b])
            .collect()
    }

    pub fn neighbors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(move |&b| self.adjacency[a][b])
    }

    pub fn find(&self, side: Side, kind: SegmentKind) -> Option<usize> {
        self.nodes.iter().position(|s| s.side == side && s.kind == kind)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(a) = stack.pop() {
            for b in self.neighbors(a) {
                if !std::mem::replace(&mut seen[b], true) {
                    stack.push(b);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Edges as segment names, e.g. `("P0", "Q(v2,v3)")`.
    pub fn named_edges(&self) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(a, b)| (self.nodes[a].name(), self.nodes[b].name()))
            .collect()
    }
}

/// Builds the auxiliary graph of `p` and `q` in `g`.
///
/// When `G − S` is connected the result must be connected too; a
/// disconnected result is then reported as [`Error::Critical`].
pub fn build_auxiliary_h(g: &Graph, p: &Path, q: &Path) -> Result<AuxiliaryH> {
    for path in [p, q] {
        if !path.is_path_in(g) {
            return Err(Error::InvalidPath(format!("{path} is not a path of the graph")));
        }
    }
    let frame = SharedFrame::new(p, q)?;
    let nodes = frame.segments();
    let outside = g
        .vertices()
        .difference(p.vertex_set())
        .difference(q.vertex_set());
    let mut adjacency = vec![vec![false; nodes.len()]; nodes.len()];
    for (a, x) in nodes.iter().enumerate() {
        let entry = g.neighbors_of_set(x.set).intersection(outside);
        let mut reach = VertexSet::EMPTY;
        for v in entry {
            if !reach.contains(v) {
                reach = reach.union(g.reachable_within(v, outside));
            }
        }
        let touch = g.neighbors_of_set(x.set.union(reach));
        for (b, y) in nodes.iter().enumerate() {
            if a != b && !touch.is_disjoint(y.set) {
                adjacency[a][b] = true;
                adjacency[b][a] = true;
            }
        }
    }
    let h = AuxiliaryH { frame, nodes, adjacency };
    let rest = g.vertices().difference(h.frame.shared());
    let rest_connected = rest
        .first()
        .is_none_or(|v| g.reachable_within(v, rest) == rest);
    if rest_connected && !h.is_connected() {
        return Err(Error::Critical("G - S is connected but the auxiliary graph is not".into()));
    }
    Ok(h)
}

/// Why a pair of pieces is replaceable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Replaceability {
    /// Both pieces, together with `v_i` and `v_{i+1}`, span a cycle of `L`.
    Cycle { i: u8 },
    /// `Q` meets `v1` first and the pair is the two head pieces.
    SharedFirst,
    /// `Q` meets `v4` last and the pair is the two tail pieces.
    SharedLast,
}

/// A piece `x` of `P − S` and a piece `y` of `Q − S` that can be exchanged.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReplaceablePair {
    pub x: Segment,
    pub y: Segment,
    pub reason: Replaceability,
    /// `P` with `x` replaced by `y`.
    pub swapped: Path,
}

impl ReplaceablePair {
    /// The exchange keeps the length of `P`; always so when both paths are longest.
    pub fn preserves_length(&self, p: &Path) -> bool {
        self.swapped.len() == p.len()
    }
}

fn is_cycle(l: &Graph, set: VertexSet) -> bool {
    set.len() >= 3
        && set.iter().all(|v| l.neighbors(v).intersection(set).len() == 2)
        && set.first().is_some_and(|v| l.reachable_within(v, set) == set)
}

fn is_path_graph(l: &Graph, set: VertexSet) -> bool {
    let Some(start) = set.first() else { return false };
    let degree_sum: usize = set.iter().map(|v| l.neighbors(v).intersection(set).len()).sum();
    l.reachable_within(start, set) == set
        && degree_sum == 2 * (set.len() - 1)
        && set.iter().all(|v| l.neighbors(v).intersection(set).len() <= 2)
}

/// Every replaceable pair of `p` and `q`, where `sigma` must be their
/// intersection pattern. Each pair carries the path obtained by exchanging
/// the pieces inside `P`.
pub fn replaceable_pairs(p: &Path, q: &Path, sigma: Permutation) -> Result<Vec<ReplaceablePair>> {
    let frame = SharedFrame::new(p, q)?;
    if frame.sigma != sigma {
        return Err(Error::precondition(format!(
            "pattern of the paths is {}, not {sigma}",
            frame.sigma
        )));
    }
    let l = frame.union_graph(frame.vertex_bound());
    replaceable_in_frame(&frame, &l, &frame.segments())
}

fn replaceable_in_frame(frame: &SharedFrame, l: &Graph, segments: &[Segment]) -> Result<Vec<ReplaceablePair>> {
    let sigma = frame.sigma;
    let mut out = Vec::new();
    for x in segments.iter().filter(|s| s.side == Side::P) {
        for y in segments.iter().filter(|s| s.side == Side::Q) {
            let pieces = x.set.union(y.set);
            let cycle = (1..=3u8).find(|&i| {
                is_cycle(l, pieces.with(frame.vertex(i)).with(frame.vertex(i + 1)))
            });
            let reason = match (cycle, x.kind, y.kind) {
                (Some(i), _, _) => Replaceability::Cycle { i },
                (None, SegmentKind::Head, SegmentKind::Head) if sigma.apply(1) == 1 => Replaceability::SharedFirst,
                (None, SegmentKind::Tail, SegmentKind::Tail) if sigma.apply(4) == 4 => Replaceability::SharedLast,
                _ => continue,
            };
            let swapped = swap_piece(l, &frame.p, x, y).ok_or_else(|| {
                Error::Critical(format!("exchanging {x} for {y} does not give a path"))
            })?;
            out.push(ReplaceablePair { x: x.clone(), y: y.clone(), reason, swapped });
        }
    }
    Ok(out)
}

fn swap_piece(l: &Graph, p: &Path, x: &Segment, y: &Segment) -> Option<Path> {
    let seq = p.vertices();
    let (before, after) = (&seq[..x.start], &seq[x.start + x.vertices.len()..]);
    let forward = y.vertices.clone();
    let mut backward = forward.clone();
    backward.reverse();
    [forward, backward].into_iter().find_map(|piece| {
        let joined: Vec<usize> = before.iter().chain(&piece).chain(after).copied().collect();
        let candidate = Path::from_trusted(joined);
        candidate.is_path_in(l).then_some(candidate)
    })
}

/// A structural predicate that failed on an instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimViolation {
    pub claim: &'static str,
    pub detail: String,
}

/// The instance moved into the frame of its class representative, with the
/// auxiliary graph, replaceable pairs and any predicate failures.
#[derive(Debug, Clone)]
pub struct StructuralCheck {
    pub class: SigmaClass,
    pub moves: Vec<Symmetry>,
    pub h: AuxiliaryH,
    pub replaceable: Vec<ReplaceablePair>,
    pub violations: Vec<ClaimViolation>,
}

/// Relabels `(p, q)` so that their pattern is the class representative.
pub fn to_representative_frame(p: &Path, q: &Path) -> Result<(Path, Path, SigmaClass, Vec<Symmetry>)> {
    let sigma = intersection_pattern(p, q)?;
    let (class, moves) = canonical_sigma_with_moves(sigma);
    let (mut p, mut q) = (p.clone(), q.clone());
    for op in &moves {
        match op {
            Symmetry::SwapPaths => std::mem::swap(&mut p, &mut q),
            Symmetry::ReverseP => p = p.reversed(),
        }
    }
    debug_assert_eq!(intersection_pattern(&p, &q)?, class.representative);
    Ok((p, q, class, moves))
}

/// Evaluates the edge-absence predicates on the auxiliary graph of two
/// longest paths of `g` sharing exactly four vertices, none an endpoint.
///
/// In the representative frame:
/// * a head/tail piece of `P` and one of `Q` are never adjacent, nor is any
///   `P`-piece/`Q`-piece pair that forms a path of `L` with one shared vertex;
///   and a replaceable pair disjoint from such a pair has each member
///   adjacent to at most one of the two;
/// * outside class 6, `P0` and `P1` are not adjacent;
/// * in classes 3–7, `P0` is not adjacent to `P(v2,v3)`;
/// * in classes 5 and 6, `P0` is not adjacent to `P(v3,v4)`.
///
/// Longest-ness of the paths is the caller's responsibility.
pub fn check_structural_claims(g: &Graph, p: &Path, q: &Path) -> Result<StructuralCheck> {
    let (p, q, class, moves) = to_representative_frame(p, q)?;
    let h = build_auxiliary_h(g, &p, &q)?;
    let l = h.frame.union_graph(g.n());
    let replaceable = replaceable_in_frame(&h.frame, &l, &h.nodes)?;
    let index_of = |s: &Segment| h.nodes.iter().position(|n| n == s).expect("segment of h");
    let mut violations = Vec::new();

    for (xi, x) in h.nodes.iter().enumerate().filter(|(_, s)| s.side == Side::P) {
        for (yi, y) in h.nodes.iter().enumerate().filter(|(_, s)| s.side == Side::Q) {
            let ends = x.is_end_piece() && y.is_end_piece();
            let through_one = (1..=4u8).any(|i| is_path_graph(&l, x.set.union(y.set).with(h.frame.vertex(i))));
            if !(ends || through_one) {
                continue;
            }
            if h.has_edge(xi, yi) {
                violations.push(ClaimViolation {
                    claim: "xy-nonadjacent",
                    detail: format!("{x} and {y} are adjacent"),
                });
            }
            for pair in &replaceable {
                let (a, b) = (index_of(&pair.x), index_of(&pair.y));
                if [a, b].iter().any(|&c| c == xi || c == yi) {
                    continue;
                }
                for c in [a, b] {
                    if h.has_edge(c, xi) && h.has_edge(c, yi) {
                        violations.push(ClaimViolation {
                            claim: "xy-replaceable",
                            detail: format!("{} is adjacent to both {x} and {y}", h.nodes[c]),
                        });
                    }
                }
            }
        }
    }

    let p0 = h.find(Side::P, SegmentKind::Head).expect("P0 is nonempty");
    let mut forbid = |other: Option<usize>, claim: &'static str| {
        if let Some(o) = other.filter(|&o| h.has_edge(p0, o)) {
            violations.push(ClaimViolation {
                claim,
                detail: format!("P0 is adjacent to {} in class σ{}", h.nodes[o], class.index),
            });
        }
    };
    if class.index != 6 {
        forbid(h.find(Side::P, SegmentKind::Tail), "p0-p1");
    }
    if (3..=7).contains(&class.index) {
        forbid(h.find(Side::P, SegmentKind::Between(2, 3)), "p0-p23");
    }
    if matches!(class.index, 5 | 6) {
        forbid(h.find(Side::P, SegmentKind::Between(3, 4)), "p0-p34");
    }

    Ok(StructuralCheck { class, moves, h, replaceable, violations })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// `P = 0 10 1 11 2 12 3 13 4 ...` style fixture on a complete graph: P and
    /// Q are arbitrary paths through the four shared vertices 10..13.
    fn pair(g: &Graph, p: &[usize], q: &[usize]) -> (Path, Path) {
        (Path::new(g, p.to_vec()).unwrap(), Path::new(g, q.to_vec()).unwrap())
    }

    #[test]
    fn segments_partition_off_shared_vertices() {
        let g = Graph::complete(16).unwrap();
        let (p, q) = pair(&g, &[0, 10, 1, 11, 12, 2, 13, 3], &[4, 5, 10, 6, 12, 11, 7, 13, 8]);
        let frame = SharedFrame::new(&p, &q).unwrap();
        let segs = frame.segments();
        let names: Vec<String> = segs.iter().map(Segment::name).collect();
        assert_eq!(names, ["P0", "P(v1,v2)", "P(v3,v4)", "P1", "Q0", "Q(v1,v3)", "Q(v2,v4)", "Q1"]);
        let p_union = segs.iter().filter(|s| s.side == Side::P).fold(VertexSet::EMPTY, |a, s| a.union(s.set));
        assert_eq!(p_union, p.vertex_set().difference(frame.shared()));
        assert_eq!(frame.sigma, perm("(23)"));
    }

    #[test]
    fn frame_rejects_shared_endpoints() {
        let g = Graph::complete(10).unwrap();
        let (p, q) = pair(&g, &[1, 2, 3, 4, 5], &[6, 2, 3, 4, 5, 7]);
        assert!(SharedFrame::new(&p, &q).is_err());
    }

    #[test]
    fn direct_edges_only_when_nothing_outside() {
        // G = L plus the single chord 0-4 between P0 and Q0
        let (p, q) = (vec![0, 10, 1, 11, 2, 12, 3, 13, 5], vec![4, 10, 6, 11, 7, 12, 8, 13, 9]);
        let mut edges: Vec<(usize, usize)> = p.windows(2).chain(q.windows(2)).map(|w| (w[0], w[1])).collect();
        edges.push((0, 4));
        let g = Graph::from_edges(14, edges).unwrap();
        let (p, q) = pair(&g, &p, &q);
        let h = build_auxiliary_h(&g, &p, &q).unwrap();
        assert_eq!(h.nodes.len(), 10);
        assert_eq!(h.named_edges(), vec![("P0".to_string(), "Q0".to_string())]);
    }

    #[test]
    fn outside_path_gives_one_edge() {
        // P1 = {5} and Q(v1,v2) = {6} joined through the outside path 5-14-15-6
        let (p, q) = (vec![0, 10, 1, 11, 2, 12, 3, 13, 5], vec![4, 10, 6, 11, 7, 12, 8, 13, 9]);
        let mut edges: Vec<(usize, usize)> = p.windows(2).chain(q.windows(2)).map(|w| (w[0], w[1])).collect();
        edges.extend([(5, 14), (14, 15), (15, 6)]);
        let g = Graph::from_edges(16, edges).unwrap();
        let (p, q) = pair(&g, &p, &q);
        let h = build_auxiliary_h(&g, &p, &q).unwrap();
        assert_eq!(h.named_edges(), vec![("P1".to_string(), "Q(v1,v2)".to_string())]);
        assert!(!h.is_connected());
    }

    #[test]
    fn connected_rest_forces_connected_h() {
        let g = Graph::complete(14).unwrap();
        let (p, q) = pair(&g, &[0, 10, 1, 11, 2, 12, 3, 13, 5], &[4, 10, 6, 11, 7, 12, 8, 13, 9]);
        let h = build_auxiliary_h(&g, &p, &q).unwrap();
        assert!(h.is_connected());
        assert_eq!(h.edges().len(), 45);
    }

    #[test]
    fn swapped_pattern_replaceable_pairs() {
        // σ = (23): Q meets v1, v3, v2, v4
        let g = Graph::complete(16).unwrap();
        let (p, q) = pair(&g, &[0, 10, 1, 11, 2, 12, 3, 13, 4], &[5, 10, 6, 12, 7, 11, 8, 13, 9]);
        let pairs = replaceable_pairs(&p, &q, perm("(23)")).unwrap();
        let names: Vec<(String, String)> = pairs.iter().map(|r| (r.x.name(), r.y.name())).collect();
        assert!(names.contains(&("P0".into(), "Q0".into())));
        assert!(names.contains(&("P1".into(), "Q1".into())));
        assert!(names.contains(&("P(v2,v3)".into(), "Q(v3,v2)".into())));
        assert_eq!(names.len(), 3);
        for r in &pairs {
            assert!(r.preserves_length(&p));
            assert!(r.swapped.is_path_in(&g));
        }
        assert!(replaceable_pairs(&p, &q, perm("(12)")).is_err());
    }

    #[test]
    fn double_transposition_has_no_end_pairs() {
        // σ = (12)(34): Q meets v2, v1, v4, v3
        let g = Graph::complete(16).unwrap();
        let (p, q) = pair(&g, &[0, 10, 1, 11, 2, 12, 3, 13, 4], &[5, 11, 6, 10, 7, 13, 8, 12, 9]);
        let pairs = replaceable_pairs(&p, &q, perm("(12)(34)")).unwrap();
        assert!(pairs.iter().all(|r| matches!(r.reason, Replaceability::Cycle { .. })));
        assert!(!pairs.is_empty());
    }

    #[test]
    fn representative_frame_matches_class() {
        let g = Graph::complete(16).unwrap();
        let (p, q) = pair(&g, &[0, 10, 1, 11, 2, 12, 3, 13, 4], &[5, 13, 6, 12, 7, 11, 8, 10, 9]);
        let (p2, q2, class, _) = to_representative_frame(&p, &q).unwrap();
        assert_eq!(class.index, 1);
        assert_eq!(intersection_pattern(&p2, &q2).unwrap(), Permutation::IDENTITY);
    }
}
