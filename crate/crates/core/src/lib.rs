//! Exact longest-path search on small graphs, and instance checks of lower
//! bounds on how many vertices two longest paths of a `k`-connected graph
//! must share.
//!
//! The pieces:
//! * [`graph`], [`graph6`], [`connectivity`]: bitset graphs, ingestion and
//!   vertex connectivity by max-flow.
//! * [`longest`]: longest-path length (bitmask DP or branch-and-bound),
//!   complete enumeration and L(G), the minimum shared-vertex count.
//! * [`machinery`]: endpoint rotations, fans, the counting inequalities and
//!   the four-shared-vertex structure, each returning checkable certificates.
//! * [`bounds`], [`report`]: closed-form bounds and per-graph verdicts.
//! * [`generators`]: tight families and seeded random `k`-connected graphs.
//! * [`cli`]: the sweep driver used by the `pathshare` binary.

pub mod bounds;
pub mod cli;
pub mod connectivity;
pub mod error;
mod flow;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod longest;
pub mod machinery;
pub mod path;
pub mod report;

pub use connectivity::{min_vertex_cut, vertex_connectivity};
pub use error::{Error, Result};
pub use graph::{parse_edge_list, Graph, VertexSet};
pub use graph6::{encode_graph6, parse_graph6};
pub use longest::{enumerate_longest_paths, longest_path_length, min_pairwise_intersection, LongestPaths};
pub use path::{Path, PathPair};
pub use report::{check_graph, CheckReport, Verdict};
