//! Unit-capacity max-flow on the vertex-split digraph of a graph.
//!
//! Vertex `v` becomes `v_in -> v_out` with capacity one and every edge `uv`
//! becomes `u_out -> v_in` and `v_out -> u_in` with capacity `n`, so every
//! finite cut consists of split arcs. Integral flows in this network
//! are exactly families of internally disjoint paths.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Terminals {
    /// A single sink vertex that may absorb any number of paths.
    Single(usize),
    /// Each vertex of the set absorbs at most one path; paths never pass
    /// through the set.
    Distinct(VertexSet),
}

#[derive(Debug)]
pub(crate) struct SplitFlow {
    n: usize,
    source: usize,
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    original: Vec<bool>,
    value: usize,
}

const fn v_in(v: usize) -> usize {
    2 * v
}

const fn v_out(v: usize) -> usize {
    2 * v + 1
}

impl SplitFlow {
    /// Maximum flow from `source` to `terminals`, stopping early once `limit`
    /// units are routed. Vertices in `avoid` are removed from the network.
    pub(crate) fn run(
        g: &Graph,
        source: usize,
        terminals: Terminals,
        avoid: VertexSet,
        limit: usize,
    ) -> SplitFlow {
        let n = g.n();
        let sink = 2 * n;
        let mut net = SplitFlow {
            n,
            source,
            head: vec![Vec::new(); 2 * n + 1],
            to: Vec::new(),
            cap: Vec::new(),
            original: Vec::new(),
            value: 0,
        };
        let terminal_set = match terminals {
            Terminals::Single(t) => VertexSet::singleton(t),
            Terminals::Distinct(set) => set,
        };
        for v in 0..n {
            if avoid.contains(v) {
                continue;
            }
            if v == source {
                // the source is entered only through v_out
            } else if terminal_set.contains(v) {
                let sink_cap = match terminals {
                    Terminals::Single(_) => n as u32,
                    Terminals::Distinct(_) => 1,
                };
                net.add_edge(v_in(v), sink, sink_cap);
                continue;
            } else {
                net.add_edge(v_in(v), v_out(v), 1);
            }
            for u in g.neighbors(v).difference(avoid) {
                if u != source {
                    net.add_edge(v_out(v), v_in(u), n as u32);
                }
            }
        }
        while net.value < limit && net.augment(sink) {
            net.value += 1;
        }
        net
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: u32) {
        let id = self.to.len();
        self.head[from].push(id);
        self.to.push(to);
        self.cap.push(cap);
        self.original.push(true);
        self.head[to].push(id + 1);
        self.to.push(from);
        self.cap.push(0);
        self.original.push(false);
    }

    fn augment(&mut self, sink: usize) -> bool {
        let start = v_out(self.source);
        let mut parent_edge = vec![usize::MAX; self.head.len()];
        let mut seen = vec![false; self.head.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &e in &self.head[x] {
                let y = self.to[e];
                if self.cap[e] > 0 && !seen[y] {
                    seen[y] = true;
                    parent_edge[y] = e;
                    if y == sink {
                        let mut cur = sink;
                        while cur != start {
                            let e = parent_edge[cur];
                            self.cap[e] -= 1;
                            self.cap[e ^ 1] += 1;
                            cur = self.to[e ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(y);
                }
            }
        }
        false
    }

    pub(crate) fn value(&self) -> usize {
        self.value
    }

    /// Vertices whose split edge crosses the residual cut: a minimum vertex
    /// separator when the terminal is a single vertex not adjacent to the source.
    pub(crate) fn min_cut(&self) -> VertexSet {
        let start = v_out(self.source);
        let mut seen = vec![false; self.head.len()];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &e in &self.head[x] {
                let y = self.to[e];
                if self.cap[e] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.n)
            .filter(|&v| v != self.source && seen[v_in(v)] && !seen[v_out(v)])
            .collect()
    }

    /// Decomposes the flow into vertex sequences from the source to a terminal.
    pub(crate) fn paths(&self) -> Vec<Vec<usize>> {
        let mut used: Vec<u32> = (0..self.to.len())
            .map(|e| if self.original[e] { self.cap[e ^ 1] } else { 0 })
            .collect();
        let sink = 2 * self.n;
        let mut out = Vec::with_capacity(self.value);
        for _ in 0..self.value {
            let mut path = vec![self.source];
            let mut node = v_out(self.source);
            while node != sink {
                let e = *self.head[node]
                    .iter()
                    .find(|&&e| self.original[e] && used[e] > 0)
                    .expect("flow conservation");
                used[e] -= 1;
                node = self.to[e];
                if node != sink && node.is_multiple_of(2) {
                    path.push(node / 2);
                }
            }
            out.push(path);
        }
        out
    }
}
