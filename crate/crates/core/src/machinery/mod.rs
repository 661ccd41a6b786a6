//! Certified versions of the constructive steps used to bound shared
//! vertices: endpoint rotations, fans, the counting inequalities, and the
//! four-shared-vertex structure.

pub mod auxiliary;
pub mod claims;
pub mod fan;
pub mod rotation;
pub mod sigma;

pub use auxiliary::{
    build_auxiliary_h, check_structural_claims, replaceable_pairs, AuxiliaryH, ReplaceablePair,
    Segment, SegmentKind, SharedFrame, Side, StructuralCheck,
};
pub use claims::{check_claim2, check_submain, outside_edge_scan, OutsideEdgeScan};
pub use fan::{fan_paths, FanResult};
pub use rotation::{lemma1_witness, normalize_endpoints, rotate_path, rotation_closure, RotationWitness, RotationStep, WitnessCase};
pub use sigma::{canonical_sigma, intersection_pattern, Permutation, SigmaClass};
