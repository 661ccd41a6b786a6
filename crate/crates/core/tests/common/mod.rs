//! Brute-force reference implementations shared by the integration tests.
//! They use nothing from the library except `Graph` accessors.
#![allow(dead_code)]

use pathshare::{Graph, Path};

pub fn adjacency(g: &Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.n()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn connected_within(adj: &[u32], alive: u32) -> bool {
    if alive == 0 {
        return true;
    }
    let start = alive.trailing_zeros();
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & alive & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == alive
}

/// Smallest vertex set whose removal disconnects `g`, or `n - 1` for a
/// complete graph. Exponential; fine up to about 12 vertices.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    let adj = adjacency(g);
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best = n - 1;
    for removed in 0..=all {
        let size = removed.count_ones() as usize;
        if size < best && size <= n - 2 && !connected_within(&adj, all & !removed) {
            best = size;
        }
    }
    best
}

/// Every longest path, as (length, number of paths up to reversal, distinct
/// vertex-set masks), by plain depth-first search over all simple paths.
pub struct NaiveLongest {
    pub length: usize,
    pub count: usize,
    pub sets: Vec<u32>,
}

impl NaiveLongest {
    /// Fewest shared vertices over two longest paths with different vertex
    /// sets, or the set size when all longest paths cover the same vertices.
    pub fn min_shared(&self) -> usize {
        if self.sets.len() == 1 {
            return self.sets[0].count_ones() as usize;
        }
        let mut best = usize::MAX;
        for (i, a) in self.sets.iter().enumerate() {
            for b in &self.sets[i + 1..] {
                best = best.min((a & b).count_ones() as usize);
            }
        }
        best
    }
}

pub fn naive_longest(g: &Graph) -> NaiveLongest {
    let adj = adjacency(g);
    let mut state = NaiveLongest { length: 0, count: 0, sets: Vec::new() };
    let mut directed = 0usize;
    fn dfs(adj: &[u32], v: usize, used: u32, len: usize, best: &mut NaiveLongest, directed: &mut usize) {
        if len > best.length {
            best.length = len;
            best.sets.clear();
            *directed = 0;
        }
        if len == best.length {
            *directed += 1;
            if !best.sets.contains(&used) {
                best.sets.push(used);
            }
        }
        let mut next = adj[v] & !used;
        while next != 0 {
            let u = next.trailing_zeros() as usize;
            next &= next - 1;
            dfs(adj, u, used | 1 << u, len + 1, best, directed);
        }
    }
    for v in 0..g.n() {
        dfs(&adj, v, 1 << v, 0, &mut state, &mut directed);
    }
    state.count = if state.length == 0 { directed } else { directed / 2 };
    state
}

pub fn ceil_div(a: i64, b: i64) -> i64 {
    let q = a / b;
    if a % b != 0 && ((a < 0) == (b < 0)) {
        q + 1
    } else {
        q
    }
}

/// Independent check of a witness against the five conditions.
pub fn witness_certificate_ok(g: &Graph, p: &Path, q: &Path, witness: &Path, i: usize) -> Result<(), String> {
    let seq = witness.vertices();
    let adjacent_chain = seq.windows(2).all(|w| g.has_edge(w[0], w[1]));
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if !adjacent_chain || sorted.len() != seq.len() || seq.len() != q.vertex_count() {
        return Err(format!("{witness} is not a longest path"));
    }
    let mut q_sorted = q.vertices().to_vec();
    q_sorted.sort_unstable();
    if sorted != q_sorted {
        return Err("vertex set differs from Q".into());
    }
    if i == 0 || i >= seq.len() {
        return Err(format!("index {i} out of range"));
    }
    let on_p = |v: usize| p.vertices().contains(&v);
    if on_p(seq[0]) {
        return Err("first vertex lies on P".into());
    }
    if on_p(seq[i]) {
        return Err("q'_i lies on P".into());
    }
    if !g.has_edge(seq[0], seq[i]) {
        return Err("q'_i not adjacent to q'_0".into());
    }
    if i != 1 && !(i + 1 < seq.len() && g.has_edge(seq[0], seq[i + 1])) {
        return Err("q'_0 q'_(i+1) missing".into());
    }
    Ok(())
}
