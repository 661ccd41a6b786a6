//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices, stored as
//! adjacency bitsets.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count (two machine words per neighborhood).
pub const MAX_VERTICES: usize = 128;

/// A set of vertex ids in `0..MAX_VERTICES`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u128 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u128);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let len = self.0.count_ones() as usize;
        (len, Some(len))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Simple undirected graph on vertices `0..n`.
///
/// Immutable once built; every constructor enforces symmetry and the absence
/// of self-loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            adjacency: vec![VertexSet::EMPTY; n],
            edge_count: 0,
        })
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut builder = GraphBuilder::new(n)?;
        for (u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut builder = GraphBuilder::new(n)?;
        for v in 0..n {
            for u in 0..v {
                builder.add_edge(u, v)?;
            }
        }
        Ok(builder.build())
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::precondition("a cycle needs at least 3 vertices"));
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    /// Union of the neighborhoods of every vertex in `set`.
    pub fn neighbors_of_set(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.adjacency[v]))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adjacency[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Vertices reachable from `start` inside `allowed` (which should contain `start`).
    pub fn reachable_within(&self, start: usize, allowed: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self
                .neighbors_of_set(frontier)
                .intersection(allowed)
                .difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        match self.n() {
            0 => true,
            n => self.reachable_within(0, VertexSet::full(n)).len() == n,
        }
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.reachable_within(v, left);
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Subgraph induced on `keep`, relabelled to `0..keep.len()` in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let index: Vec<usize> = keep.iter().collect();
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in index.iter().enumerate() {
            position[v] = i;
        }
        let mut adjacency = vec![VertexSet::EMPTY; index.len()];
        let mut edge_count = 0;
        for (i, &v) in index.iter().enumerate() {
            for u in self.adjacency[v].intersection(keep) {
                adjacency[i].insert(position[u]);
                edge_count += 1;
            }
        }
        Graph {
            adjacency,
            edge_count: edge_count / 2,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Incremental constructor for [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    adjacency: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(GraphBuilder {
            adjacency: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        let n = self.adjacency.len();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::precondition(format!("self-loop at vertex {u}")));
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(self)
    }

    pub fn build(self) -> Graph {
        let edge_count = self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2;
        Graph {
            adjacency: self.adjacency,
            edge_count,
        }
    }
}

/// Parses the edge-list text format: optional first line holding the vertex
/// count, then one `u v` pair per line. Blank lines and `#` comments are
/// skipped. Without a declared count, `n` is one more than the largest id.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    let mut first_content = true;
    for line in text.split_inclusive('\n') {
        let line_offset = offset;
        offset += line.len();
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<(usize, &str)> = tokens_with_offsets(body);
        if tokens.is_empty() {
            continue;
        }
        let mut values = Vec::with_capacity(tokens.len());
        for &(col, tok) in &tokens {
            let value = tok.parse::<usize>().map_err(|_| {
                Error::parse(line_offset + col, format!("expected a vertex index, found {tok:?}"))
            })?;
            values.push(value);
        }
        match (first_content, values.as_slice()) {
            (true, &[n]) => declared = Some(n),
            (_, &[u, v]) => {
                if u == v {
                    return Err(Error::parse(line_offset + tokens[0].0, format!("self-loop at vertex {u}")));
                }
                if let Some(n) = declared {
                    if u >= n || v >= n {
                        let col = if u >= n { tokens[0].0 } else { tokens[1].0 };
                        return Err(Error::parse(
                            line_offset + col,
                            format!("vertex {} out of range for declared n = {n}", u.max(v)),
                        ));
                    }
                }
                edges.push((u, v));
            }
            _ => {
                return Err(Error::parse(
                    line_offset + tokens[0].0,
                    format!("expected two vertex indices, found {} tokens", tokens.len()),
                ))
            }
        }
        first_content = false;
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, edges)
}

fn tokens_with_offsets(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out
}
