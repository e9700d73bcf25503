//! Exact solvers for metric resolvability invariants of connected graphs:
//! metric dimension, fault-tolerant metric dimension, independent resolving
//! number and independent fault-tolerant resolving number, together with
//! generators for the double antiprism `A_n` and the convex polytopes `S_n`
//! and `T_n`, and tooling that checks their closed-form code tables against
//! breadth-first-search ground truth.

pub mod bitset;
pub mod closed_form;
pub mod distance;
pub mod error;
pub mod families;
pub mod graph;
pub mod resolvability;
pub mod sample;
pub mod twins;

pub use distance::{apsp, DistanceMatrix};
pub use error::{ClosedFormError, FamilyError, GraphError, ResolveError};
pub use families::{Family, FamilySpec};
pub use graph::{Graph, Vertex};
pub use resolvability::{
    chain_check, ftmd_exact, ifr_exact, independence_number_exact, ir_exact,
    metric_dimension_exact, Certificate, Evidence, Instance, Invariant, LandmarkSet, SolveOptions,
    Status,
};
pub use twins::{twin_classes, TwinKind, TwinPartition};
