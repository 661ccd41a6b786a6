//! Tight families and seeded random `k`-connected instances.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::connectivity::vertex_connectivity;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::precondition("both parts need at least one vertex"));
    }
    let mut builder = GraphBuilder::new(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            builder.add_edge(u, v)?;
        }
    }
    Ok(builder.build())
}

/// `K_{k, 2k+2}`: `k`-connected, and two of its longest paths share exactly
/// `k` vertices.
pub fn tightness_witness(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::precondition("k must be at least 1"));
    }
    complete_bipartite(k, 2 * k + 2)
}

/// One `G(n, p)` sample.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut builder = GraphBuilder::new(n)?;
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                builder.add_edge(u, v)?;
            }
        }
    }
    Ok(builder.build())
}

/// Rejection-samples `G(n, p)` until κ ≥ `k`; deterministic in `seed`.
/// `p = 1` returns `K_n` directly.
pub fn random_k_connected(n: usize, p: f64, k: usize, seed: u64, max_attempts: usize) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_k_connected_with(n, p, k, &mut rng, max_attempts)
}

pub fn random_k_connected_with<R: Rng + ?Sized>(
    n: usize,
    p: f64,
    k: usize,
    rng: &mut R,
    max_attempts: usize,
) -> Result<Graph> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::precondition(format!("edge probability {p} outside (0, 1]")));
    }
    if k >= n {
        return Err(Error::precondition(format!("a graph on {n} vertices is at most {}-connected", n.saturating_sub(1))));
    }
    if p == 1.0 {
        return Graph::complete(n);
    }
    for _ in 0..max_attempts {
        let g = gnp(n, p, rng)?;
        if vertex_connectivity(&g) >= k {
            return Ok(g);
        }
    }
    Err(Error::Generator(format!(
        "no {k}-connected G({n}, {p}) sample in {max_attempts} attempts; try a larger p"
    )))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    CompleteBipartite { a: usize, b: usize },
    /// Tightness witnesses for every `k` in `k_min..=k_max`.
    Tightness { k_min: usize, k_max: usize },
    GnpKconn { n: usize, p: f64, k: usize },
}

/// A reproducible batch of generated graphs.
///
/// Text form: `family:key=value,...`, e.g. `complete-bipartite:a=2,b=6`,
/// `tightness:k=1..3`, `gnp-kconn:n=10,p=0.6,k=3,count=20,seed=7`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneratorSpec {
    pub family: Family,
    pub count: usize,
    pub seed: u64,
    pub max_attempts: usize,
}

impl GeneratorSpec {
    pub const DEFAULT_MAX_ATTEMPTS: usize = 10_000;

    /// Graphs in a fixed order. Random graph `i` draws from stream `i` of a
    /// ChaCha generator keyed by the seed.
    pub fn generate(&self) -> Result<Vec<Graph>> {
        match self.family {
            Family::CompleteBipartite { a, b } => {
                let g = complete_bipartite(a, b)?;
                Ok(vec![g; self.count])
            }
            Family::Tightness { k_min, k_max } => (k_min..=k_max).map(tightness_witness).collect(),
            Family::GnpKconn { n, p, k } => (0..self.count)
                .map(|i| {
                    let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                    rng.set_stream(i as u64);
                    random_k_connected_with(n, p, k, &mut rng, self.max_attempts)
                })
                .collect(),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::CompleteBipartite { a, b } => write!(f, "complete-bipartite:a={a},b={b},count={}", self.count),
            Family::Tightness { k_min, k_max } => write!(f, "tightness:k={k_min}..{k_max}"),
            Family::GnpKconn { n, p, k } => write!(
                f,
                "gnp-kconn:n={n},p={p},k={k},count={},seed={},attempts={}",
                self.count, self.seed, self.max_attempts
            ),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::parse(0, format!("generator spec {s:?}: {msg}"));
        let (tag, params) = s.split_once(':').unwrap_or((s, ""));
        let mut fields = std::collections::HashMap::new();
        for item in params.split(',').filter(|x| !x.trim().is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, found {item:?}")))?;
            fields.insert(key.trim(), value.trim());
        }
        let int = |key: &str| -> Result<Option<usize>> {
            fields
                .get(key)
                .map(|v| v.parse().map_err(|_| bad(format!("{key} must be a non-negative integer"))))
                .transpose()
        };
        let need = |key: &str| int(key)?.ok_or_else(|| bad(format!("missing {key}")));
        let count = int("count")?.unwrap_or(1);
        let seed = int("seed")?.unwrap_or(0) as u64;
        let max_attempts = int("attempts")?.unwrap_or(Self::DEFAULT_MAX_ATTEMPTS);
        let family = match tag.trim() {
            "complete-bipartite" => Family::CompleteBipartite { a: need("a")?, b: need("b")? },
            "tightness" => {
                let range = fields.get("k").ok_or_else(|| bad("missing k".into()))?;
                let (lo, hi) = parse_range(range).ok_or_else(|| bad(format!("bad range {range:?}")))?;
                Family::Tightness { k_min: lo, k_max: hi }
            }
            "gnp-kconn" => {
                let p = fields
                    .get("p")
                    .ok_or_else(|| bad("missing p".into()))?
                    .parse::<f64>()
                    .map_err(|_| bad("p must be a number".into()))?;
                Family::GnpKconn { n: need("n")?, p, k: int("k")?.unwrap_or(1) }
            }
            other => return Err(bad(format!("unknown family {other:?}"))),
        };
        Ok(GeneratorSpec { family, count, seed, max_attempts })
    }
}

/// `"5"` or inclusive `"1..10"`.
pub fn parse_range(text: &str) -> Option<(usize, usize)> {
    match text.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let (lo, hi) = (lo.trim().parse().ok()?, hi.trim().parse().ok()?);
            (lo <= hi).then_some((lo, hi))
        }
        None => {
            let v = text.trim().parse().ok()?;
            Some((v, v))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::encode_graph6;

    #[test]
    fn bipartite_sizes() {
        assert_eq!(complete_bipartite(1, 1).unwrap(), Graph::complete(2).unwrap());
        assert_eq!(complete_bipartite(2, 6).unwrap().m(), 12);
        assert_eq!(complete_bipartite(3, 8).unwrap().m(), 24);
    }

    #[test]
    fn witnesses() {
        assert_eq!(tightness_witness(1).unwrap(), complete_bipartite(1, 4).unwrap());
        assert_eq!(tightness_witness(2).unwrap(), complete_bipartite(2, 6).unwrap());
        assert_eq!(tightness_witness(3).unwrap(), complete_bipartite(3, 8).unwrap());
        assert!(tightness_witness(0).is_err());
    }

    #[test]
    fn random_k_connected_cases() {
        assert_eq!(random_k_connected(6, 1.0, 5, 9, 1).unwrap(), Graph::complete(6).unwrap());
        let g = random_k_connected(10, 0.6, 3, 42, 1000).unwrap();
        assert!(vertex_connectivity(&g) >= 3);
        assert!(matches!(random_k_connected(5, 0.1, 4, 1, 10), Err(Error::Generator(_))));
        assert!(random_k_connected(5, 0.0, 1, 1, 10).is_err());
        assert!(random_k_connected(5, 0.5, 5, 1, 10).is_err());
    }

    #[test]
    fn same_seed_same_graph() {
        let a = random_k_connected(12, 0.5, 2, 1234, 1000).unwrap();
        let b = random_k_connected(12, 0.5, 2, 1234, 1000).unwrap();
        assert_eq!(encode_graph6(&a), encode_graph6(&b));
    }

    #[test]
    fn spec_round_trip() {
        for text in ["complete-bipartite:a=2,b=6,count=1", "tightness:k=1..3", "gnp-kconn:n=9,p=0.5,k=2,count=4,seed=3,attempts=100"] {
            let spec: GeneratorSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        let spec: GeneratorSpec = "gnp-kconn:n=9,p=0.5,k=2,count=4,seed=3".parse().unwrap();
        let graphs = spec.generate().unwrap();
        assert_eq!(graphs.len(), 4);
        assert_eq!(graphs, spec.generate().unwrap());
        assert!(graphs.iter().all(|g| vertex_connectivity(g) >= 2));
        assert_eq!("tightness:k=1..3".parse::<GeneratorSpec>().unwrap().generate().unwrap().len(), 3);
        assert!("bogus:n=3".parse::<GeneratorSpec>().is_err());
        assert!("gnp-kconn:p=0.5".parse::<GeneratorSpec>().is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("5"), Some((5, 5)));
        assert_eq!(parse_range("1..10"), Some((1, 10)));
        assert_eq!(parse_range("1..=10"), Some((1, 10)));
        assert_eq!(parse_range("4..2"), None);
    }
}
