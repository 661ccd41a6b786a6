//! Order patterns of four shared vertices and their seven symmetry classes.
//!
//! Label the shared vertices `v1..v4` by their order along `P`. The pattern
//! `σ` lists them in the order `Q` meets them: `v_σ(1), .., v_σ(4)`. Swapping
//! the roles of `P` and `Q` turns `σ` into `σ⁻¹`; reversing `P` turns it into
//! `(14)(23)∘σ`. Patterns related by these moves describe the same picture.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::path::Path;

/// A permutation of `{1, 2, 3, 4}`, stored as its images.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation([u8; 4]);

/// The reversal `(14)(23)`.
pub const REVERSAL: Permutation = Permutation([4, 3, 2, 1]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([1, 2, 3, 4]);

    /// From the image list `[σ(1), σ(2), σ(3), σ(4)]`.
    pub fn from_images(images: [u8; 4]) -> Result<Self> {
        let mut seen = [false; 5];
        for &x in &images {
            if !(1..=4).contains(&x) || std::mem::replace(&mut seen[x as usize], true) {
                return Err(Error::precondition(format!("{images:?} is not a permutation of 1..4")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn images(self) -> [u8; 4] {
        self.0
    }

    /// `σ(x)` for `x` in `1..=4`.
    pub fn apply(self, x: u8) -> u8 {
        self.0[x as usize - 1]
    }

    pub fn inverse(self) -> Self {
        let mut out = [0; 4];
        for x in 1..=4u8 {
            out[self.apply(x) as usize - 1] = x;
        }
        Permutation(out)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Self) -> Self {
        Permutation([1, 2, 3, 4].map(|x| self.apply(other.apply(x))))
    }

    /// All 24 permutations in lexicographic image order.
    pub fn all() -> Vec<Permutation> {
        let mut out = Vec::with_capacity(24);
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 1..=4 {
                    for d in 1..=4 {
                        if let Ok(p) = Permutation::from_images([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// element, ordered by that element.
    pub fn cycles(self) -> Vec<Vec<u8>> {
        let mut seen = [false; 5];
        let mut out = Vec::new();
        for start in 1..=4u8 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("(1)");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for x in cycle {
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Cycle notation such as `(1)`, `(23)`, `(14)(23)` or `(1342)`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::parse(0, format!("{s:?}: {msg}"));
        let mut images = [1, 2, 3, 4];
        let mut used = [false; 5];
        let mut rest = s.trim();
        if rest.is_empty() {
            return Err(bad("empty permutation"));
        }
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let cycle: Vec<u8> = body[..close]
                .chars()
                .map(|c| match c.to_digit(10) {
                    Some(d @ 1..=4) => Ok(d as u8),
                    _ => Err(bad("cycle entries must be digits 1..4")),
                })
                .collect::<Result<_>>()?;
            if cycle.is_empty() {
                return Err(bad("empty cycle"));
            }
            for &x in &cycle {
                if std::mem::replace(&mut used[x as usize], true) {
                    return Err(bad("repeated element"));
                }
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x as usize - 1] = cycle[(i + 1) % cycle.len()];
            }
            rest = &body[close + 1..];
        }
        Permutation::from_images(images)
    }
}

/// Cycle notation of the seven class representatives, in class order.
pub const REPRESENTATIVES: [&str; 7] = ["(1)", "(23)", "(1234)", "(12)", "(134)", "(12)(34)", "(1243)"];

/// A move that relabels a pair of paths without changing the picture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Symmetry {
    /// Exchange the roles of `P` and `Q`: `σ ↦ σ⁻¹`.
    SwapPaths,
    /// Traverse `P` backwards: `σ ↦ (14)(23)∘σ`.
    ReverseP,
}

impl Symmetry {
    pub fn act(self, sigma: Permutation) -> Permutation {
        match self {
            Symmetry::SwapPaths => sigma.inverse(),
            Symmetry::ReverseP => REVERSAL.compose(sigma),
        }
    }
}

/// One of the seven classes `σ1..σ7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SigmaClass {
    /// 1-based class number.
    pub index: u8,
    pub representative: Permutation,
}

impl SigmaClass {
    pub fn all() -> [SigmaClass; 7] {
        std::array::from_fn(|i| SigmaClass {
            index: i as u8 + 1,
            representative: REPRESENTATIVES[i].parse().expect("valid literal"),
        })
    }

    /// Every permutation equivalent to the representative, sorted by cycle
    /// notation length then text.
    pub fn members(self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = orbit(self.representative).into_keys().collect();
        out.sort_by_key(|p| {
            let s = p.to_string();
            (s.len(), s)
        });
        out
    }
}

impl fmt::Display for SigmaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ{}={}", self.index, self.representative)
    }
}

/// Breadth-first orbit of `sigma`, mapping each member to a shortest move
/// sequence that reaches it from `sigma`.
fn orbit(sigma: Permutation) -> HashMap<Permutation, Vec<Symmetry>> {
    let mut moves = HashMap::from([(sigma, Vec::new())]);
    let mut queue = VecDeque::from([sigma]);
    while let Some(cur) = queue.pop_front() {
        for op in [Symmetry::SwapPaths, Symmetry::ReverseP] {
            let next = op.act(cur);
            if !moves.contains_key(&next) {
                let mut seq = moves[&cur].clone();
                seq.push(op);
                moves.insert(next, seq);
                queue.push_back(next);
            }
        }
    }
    moves
}

/// The class of `sigma`.
pub fn canonical_sigma(sigma: Permutation) -> SigmaClass {
    canonical_sigma_with_moves(sigma).0
}

/// The class of `sigma` and a move sequence carrying `sigma` to the class
/// representative.
pub fn canonical_sigma_with_moves(sigma: Permutation) -> (SigmaClass, Vec<Symmetry>) {
    let reachable = orbit(sigma);
    let mut hits = SigmaClass::all()
        .into_iter()
        .filter(|class| reachable.contains_key(&class.representative));
    let class = hits.next().expect("representatives cover S4");
    debug_assert!(hits.next().is_none(), "representatives lie in distinct orbits");
    (class, reachable[&class.representative].clone())
}

/// The pattern in which `q` meets the four vertices it shares with `p`,
/// with the shared vertices labelled by their order along `p` and `q` read
/// in its stored orientation.
pub fn intersection_pattern(p: &Path, q: &Path) -> Result<Permutation> {
    let shared = p.vertex_set().intersection(q.vertex_set());
    if shared.len() != 4 {
        return Err(Error::precondition(format!(
            "paths share {} vertices; the pattern needs exactly 4",
            shared.len()
        )));
    }
    let label = |v: usize| -> u8 {
        p.vertices()
            .iter()
            .filter(|&&u| shared.contains(u))
            .position(|&u| u == v)
            .expect("shared vertex lies on p") as u8
            + 1
    };
    let mut images = [0u8; 4];
    for (slot, v) in q.vertices().iter().filter(|&&v| shared.contains(v)).enumerate() {
        images[slot] = label(*v);
    }
    Permutation::from_images(images)
}
