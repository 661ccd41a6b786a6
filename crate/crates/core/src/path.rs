use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::machinery::sigma::{intersection_pattern, Permutation};

/// A simple path, stored as its vertex sequence plus the vertex set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    vertices: Vec<usize>,
    set: VertexSet,
}

impl Path {
    /// Validates that `vertices` is a non-empty simple path in `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath("no vertices".into()));
        }
        let mut set = VertexSet::EMPTY;
        for (i, &v) in vertices.iter().enumerate() {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if set.contains(v) {
                return Err(Error::InvalidPath(format!("vertex {v} repeats")));
            }
            if i > 0 && !g.has_edge(vertices[i - 1], v) {
                return Err(Error::InvalidPath(format!("{}{v} is not an edge", vertices[i - 1])));
            }
            set.insert(v);
        }
        Ok(Path { vertices, set })
    }

    /// Caller guarantees the sequence is a simple path in the host graph.
    pub(crate) fn from_trusted(vertices: Vec<usize>) -> Self {
        let set = vertices.iter().copied().collect();
        Path { vertices, set }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.set
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("paths are non-empty")
    }

    pub fn contains(&self, v: usize) -> bool {
        self.set.contains(v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&u| u == v)
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices, set: self.set }
    }

    /// The orientation whose sequence is lexicographically smaller; this puts
    /// the smaller endpoint first.
    pub fn canonical(&self) -> Path {
        if self.is_canonical() {
            self.clone()
        } else {
            self.reversed()
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.vertices.iter().le(self.vertices.iter().rev())
    }

    /// `true` when this sequence is still a path of `g`.
    pub fn is_path_in(&self, g: &Graph) -> bool {
        self.vertices.iter().all(|&v| v < g.n())
            && self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && self.set.len() == self.vertices.len()
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path{:?}", self.vertices)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.vertices {
            if !first {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for Path {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices.serialize(serializer)
    }
}

/// Two paths together with their shared vertex set, and the order pattern
/// of the shared vertices when exactly four are shared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPair {
    pub p: Path,
    pub q: Path,
    pub shared: VertexSet,
    pub sigma: Option<Permutation>,
}

impl PathPair {
    pub fn new(p: Path, q: Path) -> Self {
        let shared = p.vertex_set().intersection(q.vertex_set());
        let sigma = intersection_pattern(&p, &q).ok();
        PathPair { p, q, shared, sigma }
    }

    pub fn shared_count(&self) -> usize {
        self.shared.len()
    }
}
